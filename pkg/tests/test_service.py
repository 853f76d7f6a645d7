import json

import pytest
from fastapi.testclient import TestClient

from metaseq.model import tagged_sentence_to_dict
from metaseq.service import OracleError, create_app
from support import (
    john_traveled_wordlevel,
    lincoln_sentence,
    mary_flew_wordlevel,
    where_did_john_wordlevel,
)


def fixture_tagger(*sentences):
    by_text = {ts.text: ts for ts in sentences}

    def tag(text):
        if text not in by_text:
            raise OracleError(f"no fixture tagging for {text!r}")
        return by_text[text]

    return tag


@pytest.fixture()
def client(tmp_path):
    tagger = fixture_tagger(
        john_traveled_wordlevel(),
        where_did_john_wordlevel(),
        mary_flew_wordlevel(),
    )
    app = create_app(
        str(tmp_path / "msdip.json"),
        queue_path=str(tmp_path / "queue.jsonl"),
        tagger=tagger,
    )
    return TestClient(app)


def test_queue_starts_empty(client):
    assert client.get("/queue").json() == {"requests": []}


def test_generate_unmatched_queues_teach_request(client):
    body = {"text": "John traveled to Boston last week."}
    response = client.post("/generate", json=body)
    assert response.status_code == 200
    doc = response.json()
    assert doc["qaps"] == []
    assert doc["teach_request"] is not None
    assert doc["teach_request"]["status"] == "pending"
    queue = client.get("/queue").json()["requests"]
    assert len(queue) == 1
    assert queue[0]["text"] == "John traveled to Boston last week."
    assert "encoding" in queue[0]


def test_full_teach_loop(client):
    # 1. unmatched sentence lands in the queue
    first = client.post(
        "/generate", json={"text": "John traveled to Boston last week."}
    ).json()
    request_id = first["teach_request"]["id"]
    size_before = client.get("/msdip").json()["size"]

    # 2. teaching one interrogative grows the store by exactly one pair
    taught = client.post(
        "/teach",
        json={
            "request_id": request_id,
            "interrogatives": ["Where did John travel to last week?"],
        },
    )
    assert taught.status_code == 200
    doc = taught.json()
    assert len(doc["learned"]) == 1
    assert doc["duplicates"] == []
    assert client.get("/msdip").json()["size"] == size_before + 1

    # 3. the taught sentence itself now generates a perfect-match QAP
    assert len(doc["qaps"]) >= 1
    assert doc["qaps"][0]["match"] == "perfect"
    assert doc["qaps"][0]["question"] == "Where did John travel to last week?"

    # 4. the request is no longer pending
    assert client.get("/queue").json()["requests"] == []

    # 5. a fresh sentence in the same shape generates the expected pair
    second = client.post(
        "/generate", json={"text": "Mary flew to London last month."}
    ).json()
    assert [q["question"] for q in second["qaps"]] == [
        "Where did Mary fly to last month?"
    ]
    assert second["qaps"][0]["answer"] == "London"
    assert second["teach_request"] is None


def test_teach_duplicate_returns_duplicate(client):
    first = client.post(
        "/generate", json={"text": "John traveled to Boston last week."}
    ).json()
    request_id = first["teach_request"]["id"]
    body = {
        "request_id": request_id,
        "interrogatives": ["Where did John travel to last week?"],
    }
    assert client.post("/teach", json=body).status_code == 200
    size = client.get("/msdip").json()["size"]
    again = client.post("/teach", json=body)
    assert again.status_code == 200
    doc = again.json()
    assert doc["learned"] == []
    assert len(doc["duplicates"]) == 1
    assert client.get("/msdip").json()["size"] == size


def test_teach_unknown_request_404(client):
    response = client.post(
        "/teach", json={"request_id": "nope", "interrogatives": ["Where?"]}
    )
    assert response.status_code == 404


def test_pairs_direct_insert(client):
    body = {
        "decl": tagged_sentence_to_dict(john_traveled_wordlevel()),
        "interrogatives": [tagged_sentence_to_dict(where_did_john_wordlevel())],
    }
    response = client.post("/pairs", json=body)
    assert response.status_code == 200
    assert len(response.json()["learned"]) == 1
    listing = client.get("/msdip").json()
    assert listing["size"] == 1
    assert listing["pairs"][0]["source"] == "taught"
    assert listing["pairs"][0]["md"].startswith("ARG0/NNP/PER")


def test_pairs_rejects_unusable_declarative(client):
    doc = tagged_sentence_to_dict(lincoln_sentence())
    doc["frames"] = []
    response = client.post(
        "/pairs",
        json={"decl": doc, "interrogatives": [doc]},
    )
    assert response.status_code == 422


def test_dismiss_queue_entry(client):
    first = client.post(
        "/generate", json={"text": "John traveled to Boston last week."}
    ).json()
    request_id = first["teach_request"]["id"]
    response = client.delete(f"/queue/{request_id}")
    assert response.status_code == 200
    assert client.get("/queue").json()["requests"] == []
    assert client.delete("/queue/does-not-exist").status_code == 404


def test_oracle_failure_is_retriable_503(client):
    response = client.post("/generate", json={"text": "Unknown sentence here."})
    assert response.status_code == 503


def test_no_oracle_configured_503(tmp_path):
    app = create_app(str(tmp_path / "m.json"), queue_path=str(tmp_path / "q.jsonl"))
    client = TestClient(app)
    response = client.post("/generate", json={"text": "anything"})
    assert response.status_code == 503


def test_store_and_queue_persist_across_restart(tmp_path):
    msdip = str(tmp_path / "msdip.json")
    queue_path = str(tmp_path / "queue.jsonl")
    tagger = fixture_tagger(john_traveled_wordlevel(), where_did_john_wordlevel())
    client1 = TestClient(create_app(msdip, queue_path=queue_path, tagger=tagger))
    first = client1.post(
        "/generate", json={"text": "John traveled to Boston last week."}
    ).json()
    client1.post(
        "/teach",
        json={
            "request_id": first["teach_request"]["id"],
            "interrogatives": ["Where did John travel to last week?"],
        },
    )
    client2 = TestClient(create_app(msdip, queue_path=queue_path, tagger=tagger))
    assert client2.get("/msdip").json()["size"] == 1
    # taught request stays recorded, not pending
    assert client2.get("/queue").json()["requests"] == []
    raw = [json.loads(line) for line in open(queue_path, encoding="utf-8")]
    assert raw and raw[0]["status"] == "taught"


def test_repeated_generate_does_not_duplicate_queue(client):
    body = {"text": "John traveled to Boston last week."}
    client.post("/generate", json=body)
    client.post("/generate", json=body)
    assert len(client.get("/queue").json()["requests"]) == 1


def test_console_static_serving(tmp_path):
    console = tmp_path / "console"
    console.mkdir()
    (console / "index.html").write_text("<html><body>console</body></html>")
    app = create_app(
        str(tmp_path / "m.json"),
        queue_path=str(tmp_path / "q.jsonl"),
        console_dir=str(console),
    )
    client = TestClient(app)
    response = client.get("/")
    assert response.status_code == 200
    assert "console" in response.text
    # API routes still take precedence over the static mount
    assert client.get("/queue").json() == {"requests": []}


def test_concurrent_teach_single_writer(tmp_path):
    import threading

    tagger = fixture_tagger(john_traveled_wordlevel(), where_did_john_wordlevel())
    app = create_app(
        str(tmp_path / "msdip.json"),
        queue_path=str(tmp_path / "queue.jsonl"),
        tagger=tagger,
    )
    client = TestClient(app)
    first = client.post(
        "/generate", json={"text": "John traveled to Boston last week."}
    ).json()
    request_id = first["teach_request"]["id"]
    body = {
        "request_id": request_id,
        "interrogatives": ["Where did John travel to last week?"],
    }
    results = []

    def teach():
        results.append(client.post("/teach", json=body).json())

    threads = [threading.Thread(target=teach) for _ in range(6)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    # exactly one insert wins; every response is coherent
    learned = sum(len(r["learned"]) for r in results)
    duplicates = sum(len(r["duplicates"]) for r in results)
    assert learned == 1
    assert duplicates == 5
    assert client.get("/msdip").json()["size"] == 1
