#!/usr/bin/env python3
"""Re-record the API fixtures in tests/recorded/ from live services.

Starts the tagging adapter and the teach service on local ports, walks the
teach scenario, and saves every response verbatim.
"""

import json
import subprocess
import sys
import tempfile
import time
from pathlib import Path

import httpx

RECORDED = Path(__file__).parent / "recorded"
ORACLE = "127.0.0.1:8771"
PRIMARY = "127.0.0.1:8770"


def wait_for(url):
    for _ in range(100):
        try:
            httpx.get(url, timeout=1)
            return
        except httpx.HTTPError:
            time.sleep(0.1)
    raise RuntimeError(f"service at {url} did not come up")


def save(name, payload):
    RECORDED.mkdir(exist_ok=True)
    path = RECORDED / f"{name}.json"
    path.write_text(json.dumps(payload, ensure_ascii=False, indent=2) + "\n")
    print(f"recorded {path.name}")


def main():
    tmp = tempfile.mkdtemp()
    oracle = subprocess.Popen(
        [sys.executable, "-m", "oracle_adapter.cli", "serve", "--bind", ORACLE],
        stdout=subprocess.DEVNULL,
        stderr=subprocess.DEVNULL,
    )
    primary = subprocess.Popen(
        [
            sys.executable, "-m", "metaseq.cli", "serve",
            "--msdip", f"{tmp}/msdip.json",
            "--bind", PRIMARY,
            "--oracle", f"http://{ORACLE}",
            "--teach-queue", f"{tmp}/queue.jsonl",
        ],
        stdout=subprocess.DEVNULL,
        stderr=subprocess.DEVNULL,
    )
    try:
        wait_for(f"http://{ORACLE}/health")
        wait_for(f"http://{PRIMARY}/msdip")
        base = f"http://{PRIMARY}"

        save("queue_empty", httpx.get(f"{base}/queue").json())
        first = httpx.post(
            f"{base}/generate",
            json={"text": "John traveled to Boston last week."},
            timeout=30,
        ).json()
        save("generate_john", first)
        save("queue_with_john", httpx.get(f"{base}/queue").json())
        request_id = first["teach_request"]["id"]
        body = {
            "request_id": request_id,
            "interrogatives": ["Where did John travel to last week?"],
        }
        save("teach_john", httpx.post(f"{base}/teach", json=body, timeout=30).json())
        save("teach_duplicate", httpx.post(f"{base}/teach", json=body, timeout=30).json())
        save(
            "generate_mary",
            httpx.post(
                f"{base}/generate",
                json={"text": "Mary flew to London last month."},
                timeout=30,
            ).json(),
        )
        save("msdip", httpx.get(f"{base}/msdip").json())
    finally:
        primary.terminate()
        oracle.terminate()
        primary.wait(timeout=5)
        oracle.wait(timeout=5)


if __name__ == "__main__":
    main()
