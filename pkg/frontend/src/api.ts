// Typed client for the inventory service. All methods throw ApiError
// for modeled error responses and let network failures bubble up as
// plain fetch errors so the UI can show them non-destructively.

export interface RecordFields {
  product_id: number;
  name: string;
  price_minor: number;
  manufacturing_date: number;
  expiry_date: number;
  delivery_date: number;
}

export type CarrierKind = "NFC" | "BARCODE";
export type DamageState = "NONE" | "SCRATCHED" | "WRINKLED";

export interface Item {
  sku: string;
  status: "IN_STOCK" | "SOLD";
  sold_at: string | null;
  record: RecordFields;
  carrier: {
    kind: CarrierKind;
    ref: string;
    generation: number;
    width_mm?: number;
  };
}

export interface ScanRequest {
  carrier_ref: string;
  tilt_deg: number;
  distance_cm: number;
  damage: DamageState;
}

export interface ScanResponse {
  success: boolean;
  failure_reason: "ANGLE" | "RANGE" | "DAMAGE" | "SIZE" | "MISMATCH" | null;
  latency_ms: number;
  payload: string | null;
  scan_token?: string;
}

export interface ReceiptLine {
  sku: string;
  name: string;
  price_minor: number;
}

export interface Receipt {
  receipt_id: number;
  lines: ReceiptLine[];
  total_minor: number;
  issued_at: string;
}

export class ApiError extends Error {
  constructor(
    public status: number,
    public code: string,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const response = await fetch(url, init);
  const body = await response.json();
  if (!response.ok) {
    throw new ApiError(
      response.status,
      typeof body.code === "string" ? body.code : "UNKNOWN",
      typeof body.message === "string" ? body.message : response.statusText,
    );
  }
  return body as T;
}

function post<T>(url: string, payload: unknown): Promise<T> {
  return request<T>(url, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(payload),
  });
}

export class ApiClient {
  constructor(private baseUrl = "") {}

  listItems(status?: "IN_STOCK" | "SOLD"): Promise<Item[]> {
    const query = status ? `?status=${status}` : "";
    return request<{ items: Item[] }>(`${this.baseUrl}/api/items${query}`)
      .then((body) => body.items);
  }

  provision(record: RecordFields, carrierKind: CarrierKind): Promise<Item> {
    return post<Item>(`${this.baseUrl}/api/items`, {
      record,
      carrier_kind: carrierKind,
    });
  }

  scan(req: ScanRequest): Promise<ScanResponse> {
    return post<ScanResponse>(`${this.baseUrl}/api/scan`, req);
  }

  checkout(scanToken: string): Promise<Receipt> {
    return post<Receipt>(`${this.baseUrl}/api/checkout`, {
      scan_token: scanToken,
    });
  }

  reprice(sku: string, newPriceMinor: number, replaceLabel = false): Promise<Item> {
    return post<Item>(`${this.baseUrl}/api/items/${sku}/reprice`, {
      new_price_minor: newPriceMinor,
      replace_label: replaceLabel,
    });
  }

  receipt(receiptId: number): Promise<Receipt> {
    return request<Receipt>(`${this.baseUrl}/api/receipts/${receiptId}`);
  }
}
