// Cart model: one line per SKU (the store tracks single physical
// items), each holding the scan token that authorizes its checkout.

export interface CartLine {
  sku: string;
  name: string;
  price_minor: number;
  scan_token: string;
  error?: string;
}

export class Cart {
  private lines_: CartLine[] = [];

  get lines(): readonly CartLine[] {
    return this.lines_;
  }

  get size(): number {
    return this.lines_.length;
  }

  total(): number {
    return this.lines_.reduce((sum, line) => sum + line.price_minor, 0);
  }

  add(line: CartLine): void {
    // re-scanning an item refreshes its token instead of duplicating it
    this.lines_ = this.lines_.filter((existing) => existing.sku !== line.sku);
    this.lines_.push(line);
  }

  remove(sku: string): void {
    this.lines_ = this.lines_.filter((line) => line.sku !== sku);
  }

  setError(sku: string, message: string): void {
    const line = this.lines_.find((candidate) => candidate.sku === sku);
    if (line) {
      line.error = message;
    }
  }

  clear(): void {
    this.lines_ = [];
  }
}
