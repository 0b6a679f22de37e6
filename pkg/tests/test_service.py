import base64
import io

import numpy as np
import pytest
from fastapi.testclient import TestClient
from PIL import Image

import lowpoly
from lowpoly.service import create_app


@pytest.fixture(scope="module")
def client(tmp_path_factory):
    app = create_app(cache_mb=64, max_upload_mb=1)
    with TestClient(app) as c:
        yield c


@pytest.fixture(scope="module")
def image_id(client, fixture_bytes_module):
    r = client.post("/images", files={"file": ("fixture.png", fixture_bytes_module)})
    assert r.status_code == 200
    return r.json()["image_id"]


@pytest.fixture(scope="module")
def fixture_bytes_module():
    from conftest import FIXTURE_PATH

    return FIXTURE_PATH.read_bytes()


class TestUpload:
    def test_upload_reports_dimensions(self, client, fixture_bytes_module):
        r = client.post("/images", files={"file": ("f.png", fixture_bytes_module)})
        assert r.status_code == 200
        body = r.json()
        assert body["width"] == 320 and body["height"] == 240

    def test_content_addressed(self, client, fixture_bytes_module):
        a = client.post("/images", files={"file": ("a.png", fixture_bytes_module)})
        b = client.post("/images", files={"file": ("b.png", fixture_bytes_module)})
        assert a.json()["image_id"] == b.json()["image_id"]

    def test_corrupt_upload_415(self, client):
        r = client.post("/images", files={"file": ("x.png", b"definitely not a png")})
        assert r.status_code == 415

    def test_oversized_upload_413(self, client):
        blob = b"\x00" * (1024 * 1024 + 1)
        r = client.post("/images", files={"file": ("big.png", blob)})
        assert r.status_code == 413

    def test_original_fetchable(self, client, image_id, fixture_bytes_module):
        r = client.get(f"/images/{image_id}")
        assert r.status_code == 200
        assert r.content == fixture_bytes_module

    def test_unknown_image_404(self, client):
        assert client.get("/images/deadbeef").status_code == 404


class TestTriangulate:
    def test_defaults_return_stats_and_mesh(self, client, image_id):
        r = client.post("/triangulate", json={"image_id": image_id})
        assert r.status_code == 200
        body = r.json()
        assert body["config"]["threshold"] == 50
        assert body["config"]["density"] == 60
        stats = body["stats"]
        mesh = body["mesh"]
        assert stats["triangle_count"] == len(mesh["triangles"])
        assert stats["vertex_count"] == len(mesh["vertices"])
        png = base64.b64decode(body["image_png_base64"])
        img = lowpoly.decode_image(png)
        assert (img.width, img.height) == (320, 240)

    def test_unknown_id_404(self, client):
        r = client.post("/triangulate", json={"image_id": "nope"})
        assert r.status_code == 404

    def test_out_of_range_threshold_422(self, client, image_id):
        r = client.post("/triangulate", json={"image_id": image_id, "threshold": 300})
        assert r.status_code == 422

    def test_bad_density_422(self, client, image_id):
        r = client.post("/triangulate", json={"image_id": image_id, "density": 0})
        assert r.status_code == 422

    def test_repeat_call_byte_identical(self, client, image_id):
        req = {"image_id": image_id, "threshold": 40, "density": 50, "seed": 3}
        a = client.post("/triangulate", json=req)
        b = client.post("/triangulate", json=req)
        assert a.content == b.content

    def test_pipeline_failure_500_names_stage(self, client):
        # 8x8 constant image: sobel finds nothing, no frame to fall back on
        px = np.full((8, 8, 3), 9, dtype=np.uint8)
        buf = io.BytesIO()
        Image.fromarray(px).save(buf, format="PNG")
        up = client.post("/images", files={"file": ("flat.png", buf.getvalue())})
        flat_id = up.json()["image_id"]
        r = client.post(
            "/triangulate", json={"image_id": flat_id, "include_frame": False}
        )
        assert r.status_code == 500
        assert r.json()["detail"]["stage"] == "sample"

    def test_stage_images_served(self, client, image_id):
        r = client.post(
            "/triangulate", json={"image_id": image_id, "include_stages": True}
        )
        assert r.status_code == 200
        stages = r.json()["stages"]
        assert set(stages) == {"gray", "sharp", "sobel", "wire"}
        for url in stages.values():
            sr = client.get(url)
            assert sr.status_code == 200
            assert sr.headers["content-type"] == "image/png"

    def test_random_mode_over_http(self, client, image_id):
        r = client.post(
            "/triangulate", json={"image_id": image_id, "random_points": 800}
        )
        assert r.status_code == 200
        assert r.json()["stats"]["vertex_count"] >= 800


def test_placeholder_page_without_bundle(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)  # no frontend/dist here
    app = create_app(static_dir=None)
    with TestClient(app) as c:
        r = c.get("/")
        assert r.status_code == 200


def test_static_bundle_served(tmp_path):
    (tmp_path / "index.html").write_text("<html><body>tuner</body></html>")
    app = create_app(static_dir=tmp_path)
    with TestClient(app) as c:
        r = c.get("/")
        assert r.status_code == 200
        assert "tuner" in r.text
