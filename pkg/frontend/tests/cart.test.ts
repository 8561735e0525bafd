import { describe, expect, it } from "vitest";

import { Cart } from "../src/cart.js";

function line(sku: string, price = 100, token = "t") {
  return { sku, name: `item ${sku}`, price_minor: price, scan_token: token };
}

describe("Cart", () => {
  it("totals its lines", () => {
    const cart = new Cart();
    cart.add(line("1", 1999));
    cart.add(line("2", 500));
    expect(cart.total()).toBe(2499);
    expect(cart.size).toBe(2);
  });

  it("re-scanning a sku refreshes the token instead of duplicating", () => {
    const cart = new Cart();
    cart.add(line("1", 100, "old"));
    cart.add(line("1", 100, "new"));
    expect(cart.size).toBe(1);
    expect(cart.lines[0].scan_token).toBe("new");
  });

  it("removes lines by sku", () => {
    const cart = new Cart();
    cart.add(line("1"));
    cart.add(line("2"));
    cart.remove("1");
    expect(cart.lines.map((l) => l.sku)).toEqual(["2"]);
  });

  it("records per-line errors", () => {
    const cart = new Cart();
    cart.add(line("1"));
    cart.setError("1", "ALREADY_SOLD");
    expect(cart.lines[0].error).toBe("ALREADY_SOLD");
  });

  it("clears", () => {
    const cart = new Cart();
    cart.add(line("1"));
    cart.clear();
    expect(cart.size).toBe(0);
    expect(cart.total()).toBe(0);
  });
});
