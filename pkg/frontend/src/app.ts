// Cashier station UI. Pure rendering over the HTTP API: every
// displayed outcome is the server's answer, never a local decision.

import {
  ApiClient,
  ApiError,
  type CarrierKind,
  type DamageState,
  type Item,
  type Receipt,
} from "./api.js";
import { Cart } from "./cart.js";
import { formatPrice, validateRecord } from "./validate.js";

export interface AppHandle {
  client: ApiClient;
  cart: Cart;
  refreshShelf(): Promise<void>;
}

const SHELL = `
  <header>
    <h1>Cashier station</h1>
    <div id="net-status" class="banner hidden"></div>
  </header>
  <main class="panels">
    <section class="panel" id="shelf-panel">
      <h2>Shelf (in stock)</h2>
      <ul id="shelf-list"></ul>
    </section>
    <section class="panel" id="scan-panel">
      <h2>Scan</h2>
      <p id="scan-selected">No item selected.</p>
      <label>Tilt (deg)
        <input id="scan-tilt" type="number" min="0" max="359" value="0" />
      </label>
      <label>Distance (cm)
        <input id="scan-distance" type="number" min="0" step="0.5" value="5" />
      </label>
      <label>Damage
        <select id="scan-damage">
          <option value="NONE">none</option>
          <option value="SCRATCHED">scratched</option>
          <option value="WRINKLED">wrinkled</option>
        </select>
      </label>
      <button id="scan-button">Scan</button>
      <div id="scan-status" class="banner hidden"></div>
    </section>
    <section class="panel" id="cart-panel">
      <h2>Cart</h2>
      <ul id="cart-list"></ul>
      <p>Total: <span id="cart-total">0.00</span></p>
      <button id="checkout-button" disabled>Checkout</button>
    </section>
    <section class="panel" id="receipts-panel">
      <h2>Receipts</h2>
      <ul id="receipts-list"></ul>
    </section>
    <section class="panel" id="admin-panel">
      <h2>Admin</h2>
      <fieldset>
        <legend>Provision item</legend>
        <label>Product id <input id="adm-id" type="number" min="0" /></label>
        <label>Name <input id="adm-name" type="text" /></label>
        <label>Price (minor) <input id="adm-price" type="number" min="0" /></label>
        <label>Manufactured (day) <input id="adm-mfg" type="number" min="0" value="0" /></label>
        <label>Expires (day) <input id="adm-exp" type="number" min="0" value="0" /></label>
        <label>Delivered (day) <input id="adm-dlv" type="number" min="0" value="0" /></label>
        <label>Carrier
          <select id="adm-carrier">
            <option value="NFC">NFC tag</option>
            <option value="BARCODE">barcode label</option>
          </select>
        </label>
        <button id="adm-provision-button">Provision</button>
        <div id="adm-provision-status" class="banner hidden"></div>
      </fieldset>
      <fieldset>
        <legend>Reprice</legend>
        <label>SKU <input id="adm-reprice-sku" type="text" /></label>
        <label>New price (minor) <input id="adm-reprice-price" type="number" min="0" /></label>
        <button id="adm-reprice-button">Reprice</button>
        <div id="adm-reprice-status" class="banner hidden"></div>
      </fieldset>
    </section>
  </main>
`;

function show(el: HTMLElement, text: string, kind: "ok" | "error" | "info") {
  el.textContent = text;
  el.className = `banner ${kind}`;
}

function hide(el: HTMLElement) {
  el.className = "banner hidden";
  el.textContent = "";
}

export function initApp(root: HTMLElement, baseUrl = ""): AppHandle {
  root.innerHTML = SHELL;
  const client = new ApiClient(baseUrl);
  const cart = new Cart();
  const receipts: Receipt[] = [];
  let shelf: Item[] = [];
  let selected: Item | null = null;

  const $ = <T extends HTMLElement>(selector: string): T => {
    const el = root.querySelector<T>(selector);
    if (!el) throw new Error(`missing element ${selector}`);
    return el;
  };

  const netStatus = $("#net-status");
  const shelfList = $("#shelf-list");
  const scanSelected = $("#scan-selected");
  const scanStatus = $("#scan-status");
  const cartList = $("#cart-list");
  const cartTotal = $("#cart-total");
  const checkoutButton = $<HTMLButtonElement>("#checkout-button");
  const receiptsList = $("#receipts-list");
  const provisionStatus = $("#adm-provision-status");
  const repriceStatus = $("#adm-reprice-status");

  function reportNetworkProblem(err: unknown) {
    show(netStatus, `Service unreachable: ${String(err)}. ` +
      "Nothing was lost; retry when the connection is back.", "error");
  }

  function renderShelf() {
    shelfList.innerHTML = "";
    for (const item of shelf) {
      const li = document.createElement("li");
      li.className = "shelf-row";
      li.dataset.sku = item.sku;
      li.innerHTML = `<span class="sku">${item.sku}</span>
        <span class="name">${item.record.name}</span>
        <span class="price">${formatPrice(item.record.price_minor)}</span>
        <span class="carrier">${item.carrier.kind}</span>
        <button class="select-button">Select</button>`;
      li.querySelector("button")!.addEventListener("click", () => {
        selected = item;
        hide(scanStatus);
        scanSelected.textContent =
          `Selected ${item.sku} (${item.record.name}, ${item.carrier.kind})`;
      });
      shelfList.appendChild(li);
    }
  }

  function renderCart() {
    cartList.innerHTML = "";
    for (const line of cart.lines) {
      const li = document.createElement("li");
      li.className = "cart-row";
      li.dataset.sku = line.sku;
      li.innerHTML = `<span class="name">${line.name}</span>
        <span class="price">${formatPrice(line.price_minor)}</span>
        <span class="line-error">${line.error ?? ""}</span>
        <button class="remove-button">Remove</button>`;
      li.querySelector("button")!.addEventListener("click", () => {
        cart.remove(line.sku);
        renderCart();
      });
      cartList.appendChild(li);
    }
    cartTotal.textContent = formatPrice(cart.total());
    checkoutButton.disabled = cart.size === 0;
  }

  function renderReceipts() {
    receiptsList.innerHTML = "";
    for (const receipt of receipts) {
      const li = document.createElement("li");
      li.className = "receipt";
      const lines = receipt.lines
        .map((ln) => `${ln.name} — ${formatPrice(ln.price_minor)}`)
        .join("; ");
      li.textContent = `#${receipt.receipt_id} ${lines} ` +
        `(total ${formatPrice(receipt.total_minor)}) at ${receipt.issued_at}`;
      receiptsList.appendChild(li);
    }
  }

  async function refreshShelf(): Promise<void> {
    try {
      shelf = await client.listItems("IN_STOCK");
      hide(netStatus);
    } catch (err) {
      if (err instanceof ApiError) throw err;
      reportNetworkProblem(err);
      return;
    }
    if (selected && !shelf.some((item) => item.sku === selected!.sku)) {
      selected = null;
      scanSelected.textContent = "No item selected.";
    }
    renderShelf();
  }

  async function doScan() {
    if (!selected) {
      show(scanStatus, "Select a shelf item first.", "info");
      return;
    }
    const req = {
      carrier_ref: selected.carrier.ref,
      tilt_deg: Number($<HTMLInputElement>("#scan-tilt").value),
      distance_cm: Number($<HTMLInputElement>("#scan-distance").value),
      damage: $<HTMLSelectElement>("#scan-damage").value as DamageState,
    };
    try {
      const outcome = await client.scan(req);
      if (outcome.success && outcome.scan_token) {
        cart.add({
          sku: selected.sku,
          name: selected.record.name,
          price_minor: selected.record.price_minor,
          scan_token: outcome.scan_token,
        });
        renderCart();
        show(scanStatus,
          `Read OK in ${outcome.latency_ms.toFixed(2)} ms; added to cart.`,
          "ok");
      } else {
        show(scanStatus, `Read failed: ${outcome.failure_reason}`, "error");
      }
    } catch (err) {
      if (err instanceof ApiError) {
        show(scanStatus, `${err.code}: ${err.message}`, "error");
      } else {
        reportNetworkProblem(err);
      }
    }
  }

  async function doCheckout() {
    const pending = [...cart.lines];
    for (const line of pending) {
      try {
        const receipt = await client.checkout(line.scan_token);
        receipts.push(receipt);
        cart.remove(line.sku);
      } catch (err) {
        if (err instanceof ApiError) {
          cart.setError(line.sku, err.code);
        } else {
          reportNetworkProblem(err);
          break; // keep remaining lines for retry
        }
      }
    }
    renderCart();
    renderReceipts();
    await refreshShelf();
  }

  async function doProvision() {
    const record = {
      product_id: Number($<HTMLInputElement>("#adm-id").value),
      name: $<HTMLInputElement>("#adm-name").value,
      price_minor: Number($<HTMLInputElement>("#adm-price").value),
      manufacturing_date: Number($<HTMLInputElement>("#adm-mfg").value),
      expiry_date: Number($<HTMLInputElement>("#adm-exp").value),
      delivery_date: Number($<HTMLInputElement>("#adm-dlv").value),
    };
    const problems = validateRecord(record);
    if (problems.length > 0) {
      show(provisionStatus, problems.join(" / "), "error");
      return;
    }
    const kind = $<HTMLSelectElement>("#adm-carrier").value as CarrierKind;
    try {
      const item = await client.provision(record, kind);
      show(provisionStatus,
        `Provisioned ${item.sku} on ${item.carrier.kind} ${item.carrier.ref}.`,
        "ok");
      await refreshShelf();
    } catch (err) {
      if (err instanceof ApiError) {
        show(provisionStatus, `${err.code}: ${err.message}`, "error");
      } else {
        reportNetworkProblem(err);
      }
    }
  }

  async function doReprice(replaceLabel: boolean) {
    const sku = $<HTMLInputElement>("#adm-reprice-sku").value.trim();
    const price = Number($<HTMLInputElement>("#adm-reprice-price").value);
    if (!sku || !Number.isInteger(price) || price < 0) {
      show(repriceStatus, "Enter a SKU and a non-negative price.", "error");
      return;
    }
    try {
      const item = await client.reprice(sku, price, replaceLabel);
      const how = item.carrier.kind === "NFC"
        ? "tag rewritten in place"
        : `replacement label printed (generation ${item.carrier.generation})`;
      show(repriceStatus,
        `${item.sku} now ${formatPrice(item.record.price_minor)} (${how}).`,
        "ok");
      await refreshShelf();
    } catch (err) {
      if (err instanceof ApiError && err.code === "IMMUTABLE_CARRIER") {
        repriceStatus.className = "banner error";
        repriceStatus.innerHTML =
          "Printed labels cannot be rewritten once printed. " +
          '<button id="adm-replace-button">Print replacement label</button>';
        repriceStatus
          .querySelector<HTMLButtonElement>("#adm-replace-button")!
          .addEventListener("click", () => void doReprice(true));
      } else if (err instanceof ApiError) {
        show(repriceStatus, `${err.code}: ${err.message}`, "error");
      } else {
        reportNetworkProblem(err);
      }
    }
  }

  $("#scan-button").addEventListener("click", () => void doScan());
  checkoutButton.addEventListener("click", () => void doCheckout());
  $("#adm-provision-button").addEventListener("click", () => void doProvision());
  $("#adm-reprice-button").addEventListener("click", () => void doReprice(false));

  renderCart();
  void refreshShelf();
  return { client, cart, refreshShelf };
}
