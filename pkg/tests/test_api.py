import pytest
from fastapi.testclient import TestClient

from nfcinv.api import create_app
from nfcinv.records import ProductRecord
from nfcinv.scan import ReaderKind, ScanContext, scan_nfc
from nfcinv.store import CarrierKind, Store


def record_body(pid=1001, name="USB-C Cable", price=1999):
    return {"product_id": pid, "name": name, "price_minor": price,
            "manufacturing_date": 10, "expiry_date": 400,
            "delivery_date": 20}


@pytest.fixture
def store():
    return Store()


@pytest.fixture
def client(store):
    app = create_app(store)
    return TestClient(app)


def provision(client, pid=1001, carrier="NFC", **kwargs):
    response = client.post("/api/items", json={
        "record": record_body(pid=pid, **kwargs), "carrier_kind": carrier})
    assert response.status_code == 201, response.text
    return response.json()


def scan(client, carrier_ref, **overrides):
    body = {"carrier_ref": carrier_ref, "tilt_deg": 0, "distance_cm": 5.0,
            "damage": "NONE"}
    body.update(overrides)
    response = client.post("/api/scan", json=body)
    assert response.status_code == 200, response.text
    return response.json()


class TestProvisionEndpoint:
    def test_nfc_provision(self, client):
        item = provision(client)
        assert item["sku"] == "1001"
        assert item["status"] == "IN_STOCK"
        assert item["carrier"]["kind"] == "NFC"
        assert len(item["carrier"]["ref"]) == 14  # 7 bytes hex

    def test_barcode_provision(self, client):
        item = provision(client, pid=4, carrier="BARCODE")
        assert item["carrier"]["ref"] == "0000000000048"

    def test_duplicate_sku_is_409(self, client):
        provision(client)
        response = client.post("/api/items", json={
            "record": record_body(), "carrier_kind": "NFC"})
        assert response.status_code == 409
        assert response.json()["code"] == "DUPLICATE_SKU"

    def test_invalid_name_is_422(self, client):
        response = client.post("/api/items", json={
            "record": record_body(name="x" * 65), "carrier_kind": "NFC"})
        assert response.status_code == 422
        assert response.json()["code"] == "INVALID_NAME"

    def test_inverted_dates_is_422(self, client):
        body = record_body()
        body["expiry_date"] = 5
        response = client.post("/api/items",
                               json={"record": body, "carrier_kind": "NFC"})
        assert response.status_code == 422
        assert response.json()["code"] == "INVALID_DATES"

    def test_malformed_json_is_400(self, client):
        response = client.post("/api/items", content=b"{nope",
                               headers={"content-type": "application/json"})
        assert response.status_code == 400
        assert response.json()["code"] == "BAD_REQUEST"

    def test_bad_carrier_kind_is_400(self, client):
        response = client.post("/api/items", json={
            "record": record_body(), "carrier_kind": "RFID"})
        assert response.status_code == 400


class TestListItems:
    def test_filter_by_status(self, client):
        provision(client, pid=1)
        provision(client, pid=2)
        token = scan(client, client.get("/api/items").json()
                     ["items"][0]["carrier"]["ref"])["scan_token"]
        client.post("/api/checkout", json={"scan_token": token})
        in_stock = client.get("/api/items", params={"status": "IN_STOCK"})
        sold = client.get("/api/items", params={"status": "SOLD"})
        assert [it["sku"] for it in in_stock.json()["items"]] == ["2"]
        assert [it["sku"] for it in sold.json()["items"]] == ["1"]

    def test_limit(self, client):
        for pid in range(1, 6):
            provision(client, pid=pid)
        response = client.get("/api/items", params={"limit": 2})
        assert len(response.json()["items"]) == 2


class TestScanEndpoint:
    def test_angle_failure_is_200(self, client):
        item = provision(client, carrier="BARCODE")
        outcome = scan(client, item["carrier"]["ref"], tilt_deg=9)
        assert outcome["success"] is False
        assert outcome["failure_reason"] == "ANGLE"
        assert "scan_token" not in outcome

    def test_nfc_scan_returns_token_and_hex_payload(self, client):
        item = provision(client)
        outcome = scan(client, item["carrier"]["ref"])
        assert outcome["success"] is True
        assert outcome["failure_reason"] is None
        assert outcome["scan_token"]
        payload = bytes.fromhex(outcome["payload"])
        assert payload[0] == 0x01

    def test_wrinkled_nfc_succeeds(self, client):
        item = provision(client)
        outcome = scan(client, item["carrier"]["ref"], damage="WRINKLED")
        assert outcome["success"] is True

    def test_scratched_barcode_fails(self, client):
        item = provision(client, carrier="BARCODE")
        outcome = scan(client, item["carrier"]["ref"], damage="SCRATCHED")
        assert outcome["failure_reason"] == "DAMAGE"

    def test_out_of_range_nfc(self, client):
        item = provision(client)
        outcome = scan(client, item["carrier"]["ref"], distance_cm=11)
        assert outcome["failure_reason"] == "RANGE"

    def test_unknown_carrier_is_404(self, client):
        response = client.post("/api/scan", json={"carrier_ref": "cafebabe"})
        assert response.status_code == 404
        assert response.json()["code"] == "UNKNOWN_CARRIER"


class TestCheckoutEndpoint:
    def test_full_flow(self, client):
        item = provision(client)
        outcome = scan(client, item["carrier"]["ref"])
        response = client.post("/api/checkout",
                               json={"scan_token": outcome["scan_token"]})
        assert response.status_code == 200
        receipt = response.json()
        assert receipt["receipt_id"] == 1
        assert receipt["total_minor"] == 1999
        assert receipt["lines"] == [
            {"sku": "1001", "name": "USB-C Cable", "price_minor": 1999}]

        again = scan(client, item["carrier"]["ref"])
        response = client.post("/api/checkout",
                               json={"scan_token": again["scan_token"]})
        assert response.status_code == 409
        assert response.json()["code"] == "ALREADY_SOLD"

    def test_unknown_token_is_410(self, client):
        response = client.post("/api/checkout", json={"scan_token": "nope"})
        assert response.status_code == 410
        assert response.json()["code"] == "TOKEN_EXPIRED"

    def test_expired_token_is_410(self, store):
        clock = {"t": 0.0}
        app = create_app(store, token_ttl_s=60.0, now=lambda: clock["t"])
        client = TestClient(app)
        item = provision(client)
        outcome = scan(client, item["carrier"]["ref"])
        clock["t"] = 60.001
        response = client.post("/api/checkout",
                               json={"scan_token": outcome["scan_token"]})
        assert response.status_code == 410

    def test_receipt_endpoint(self, client):
        item = provision(client)
        outcome = scan(client, item["carrier"]["ref"])
        receipt = client.post(
            "/api/checkout", json={"scan_token": outcome["scan_token"]}).json()
        fetched = client.get(f"/api/receipts/{receipt['receipt_id']}")
        assert fetched.status_code == 200
        assert fetched.json() == receipt
        assert client.get("/api/receipts/99").status_code == 404


class TestRepriceEndpoint:
    def test_nfc_reprice(self, client):
        provision(client)
        response = client.post("/api/items/1001/reprice",
                               json={"new_price_minor": 1499})
        assert response.status_code == 200
        assert response.json()["record"]["price_minor"] == 1499

    def test_barcode_reprice_conflict(self, client):
        provision(client, pid=7, carrier="BARCODE")
        response = client.post("/api/items/7/reprice",
                               json={"new_price_minor": 1})
        assert response.status_code == 409
        assert response.json()["code"] == "IMMUTABLE_CARRIER"

    def test_barcode_replace_label(self, client):
        provision(client, pid=7, carrier="BARCODE")
        response = client.post(
            "/api/items/7/reprice",
            json={"new_price_minor": 777, "replace_label": True})
        assert response.status_code == 200
        body = response.json()
        assert body["record"]["price_minor"] == 777
        assert body["carrier"]["generation"] == 2

    def test_sold_item_conflict(self, client):
        item = provision(client)
        outcome = scan(client, item["carrier"]["ref"])
        client.post("/api/checkout", json={"scan_token": outcome["scan_token"]})
        response = client.post("/api/items/1001/reprice",
                               json={"new_price_minor": 1})
        assert response.status_code == 409
        assert response.json()["code"] == "ITEM_SOLD"

    def test_unknown_sku_is_404(self, client):
        response = client.post("/api/items/404/reprice",
                               json={"new_price_minor": 1})
        assert response.status_code == 404


class TestAngleSweepEndpoint:
    def test_nfc_sweep_has_360_readable_rows(self, client):
        response = client.get("/api/experiments/angle-sweep",
                              params={"technology": "nfc"})
        assert response.status_code == 200
        assert response.headers["content-type"].startswith("text/csv")
        lines = response.text.splitlines()
        assert lines[0] == "technology,angle_deg,readable"
        rows = lines[1:]
        assert len(rows) == 360
        assert all(row.endswith(",true") for row in rows)

    def test_barcode_sweep(self, client):
        response = client.get("/api/experiments/angle-sweep",
                              params={"technology": "barcode"})
        rows = response.text.splitlines()[1:]
        assert len(rows) == 173
        readable = [row for row in rows if row.endswith(",true")]
        assert len(readable) == 9

    def test_bad_technology_is_400(self, client):
        response = client.get("/api/experiments/angle-sweep",
                              params={"technology": "rfid"})
        assert response.status_code == 400


class TestApiFidelity:
    def test_api_flow_equals_direct_core_flow(self, client, store):
        """The same command sequence through HTTP and against a bare
        store must produce identical core state."""
        item = provision(client)
        outcome = scan(client, item["carrier"]["ref"])
        client.post("/api/checkout", json={"scan_token": outcome["scan_token"]})
        provision(client, pid=2, name="Mouse", price=500)
        client.post("/api/items/2/reprice", json={"new_price_minor": 450})

        # rebuild with the timestamps the API store actually recorded so
        # the snapshots are byte-comparable
        timestamps = [_parse(e.ts) for e in store.events()]
        direct = Store(clock=lambda: timestamps.pop(0))
        record = ProductRecord(**record_body())
        direct_item = direct.provision(record, CarrierKind.NFC)
        ctx = ScanContext(reader=ReaderKind.NFC_READER, distance_cm=5.0)
        direct.checkout(scan_nfc(direct_item.carrier.tag, ctx))
        direct.provision(ProductRecord(**record_body(pid=2, name="Mouse",
                                                     price=500)),
                         CarrierKind.NFC)
        direct.reprice(direct.get_item("2").carrier.ref, 450)
        assert direct.snapshot_bytes() == store.snapshot_bytes()


def _parse(ts):
    from datetime import datetime

    return datetime.fromisoformat(ts.replace("Z", "+00:00"))
