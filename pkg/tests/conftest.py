import socket
import threading
import time

import pytest
from hypothesis import strategies as st

from nfcinv.records import ProductRecord

# Any NUL-free text of 1..16 chars encodes to 1..64 UTF-8 bytes, so the
# strategy never needs filtering.
names = st.text(
    alphabet=st.characters(blacklist_categories=("Cs",),
                           blacklist_characters="\x00"),
    min_size=1, max_size=16,
)

u16 = st.integers(0, 0xFFFF)
u32 = st.integers(0, 0xFFFFFFFF)


@st.composite
def product_records(draw):
    mfg = draw(u16)
    expiry = draw(st.integers(mfg, 0xFFFF))
    return ProductRecord(
        product_id=draw(u32),
        name=draw(names),
        price_minor=draw(u32),
        manufacturing_date=mfg,
        expiry_date=expiry,
        delivery_date=draw(u16),
    )


@pytest.fixture
def record():
    return ProductRecord(product_id=1001, name="USB-C Cable", price_minor=1999,
                         manufacturing_date=100, expiry_date=900,
                         delivery_date=150)


class LiveServer:
    """uvicorn on an ephemeral port in a background thread."""

    def __init__(self, app):
        import uvicorn

        self._sock = socket.socket()
        self._sock.bind(("127.0.0.1", 0))
        self.port = self._sock.getsockname()[1]
        self.base_url = f"http://127.0.0.1:{self.port}"
        config = uvicorn.Config(app, log_level="warning", lifespan="off")
        self._server = uvicorn.Server(config)
        self._thread = threading.Thread(
            target=self._server.run, kwargs={"sockets": [self._sock]},
            daemon=True)

    def __enter__(self):
        self._thread.start()
        deadline = time.monotonic() + 10
        while not self._server.started:
            if time.monotonic() > deadline:
                raise RuntimeError("server did not start")
            time.sleep(0.01)
        return self

    def __exit__(self, *exc):
        self._server.should_exit = True
        self._thread.join(timeout=10)
