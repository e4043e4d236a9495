"""Walkthrough: the HTTP review service, exercised over a real socket.

Starts the app on a local port in a background thread and walks the whole
reviewer flow with plain urllib: upload, browse, segment, select. The same
server is what ``tumorscope serve`` runs.
"""

import json
import tempfile
import threading
import time
import urllib.error
import urllib.request
from pathlib import Path

import uvicorn

from tumorscope.phantom import blob_phantom_nifti, write_fixture_atlas
from tumorscope.service import ServiceConfig, create_app

PORT = 8731
BASE = f"http://127.0.0.1:{PORT}"


def _post(path, body, content_type="application/json"):
    data = body if isinstance(body, bytes) else json.dumps(body).encode()
    req = urllib.request.Request(BASE + path, data=data, method="POST",
                                 headers={"content-type": content_type})
    with urllib.request.urlopen(req) as resp:
        return resp.status, json.loads(resp.read())


def _get_bytes(path):
    with urllib.request.urlopen(BASE + path) as resp:
        return resp.read()


def main():
    with tempfile.TemporaryDirectory() as td:
        manifest = write_fixture_atlas(Path(td) / "atlas")
        app = create_app(ServiceConfig(atlas_manifest=manifest))
        server = uvicorn.Server(uvicorn.Config(app, host="127.0.0.1", port=PORT,
                                               log_level="warning"))
        thread = threading.Thread(target=server.run, daemon=True)
        thread.start()
        while not server.started:
            time.sleep(0.02)

        try:
            status, body = _post("/api/v1/sessions", blob_phantom_nifti(),
                                 content_type="application/octet-stream")
            sid = body["session_id"]
            print(f"POST /api/v1/sessions -> {status}, "
                  f"{body['slices']} slices, session {sid[:8]}...")

            png = _get_bytes(f"/api/v1/sessions/{sid}/slices/5.png")
            print(f"GET slices/5.png -> {len(png)} bytes")

            status, seg = _post(f"/api/v1/sessions/{sid}/slices/5/segment",
                                {"c": 5, "seed": 0})
            print(f"POST slices/5/segment -> {status}, "
                  f"centroids {[round(v, 3) for v in seg['centroids']]}")
            for url in seg["candidates"]:
                print(f"  candidate {url.rsplit('/', 1)[-1]}: "
                      f"{len(_get_bytes(url))} bytes")

            brightest = max(range(5), key=lambda k: seg["centroids"][k])
            status, hits = _post(f"/api/v1/sessions/{sid}/slices/5/select",
                                 {"k": brightest})
            print(f"POST slices/5/select k={brightest} -> {status}")
            for side in ("left", "right"):
                for h in hits[side]:
                    print(f"  {side}: BA{h['area']} ({h['name']}) "
                          f"{h['pixels']} px, fraction {h['fraction']:.2f}")

            try:
                _post(f"/api/v1/sessions/{sid}/slices/3/select", {"k": 0})
            except urllib.error.HTTPError as e:
                err = json.loads(e.read())
                print(f"\nselect before segment -> {e.code} "
                      f"{err['code']}: {err['message']}")
        finally:
            server.should_exit = True
            thread.join(timeout=5)


if __name__ == "__main__":
    main()
