import json

import pytest
from fastapi.testclient import TestClient

from atlas_forge.model import CATEGORY_NAMES, RiskLevel, empty_dataset
from atlas_forge.serialization import canonical_json_bytes, use_to_jsonable
from atlas_forge.service import create_app


@pytest.fixture(scope="module")
def client(sample_atlas):
    return TestClient(create_app(sample_atlas))


class TestMeta:
    def test_golden_body(self, client, sample_atlas):
        response = client.get("/api/meta")
        assert response.status_code == 200
        expected = canonical_json_bytes(
            {
                "schema_version": 1,
                "technology": "facial recognition",
                "use_count": 138,
                "categories": list(CATEGORY_NAMES),
            }
        )
        assert response.content == expected

    def test_ten_categories(self, client):
        assert len(client.get("/api/meta").json()["categories"]) == 10

    def test_empty_dataset_counts_zero(self):
        empty_client = TestClient(create_app(empty_dataset("x")))
        assert empty_client.get("/api/meta").json()["use_count"] == 0


class TestListUses:
    def test_no_filters_returns_all(self, client, sample_atlas):
        uses = client.get("/api/uses").json()["uses"]
        assert len(uses) == len(sample_atlas.uses) == 138

    def test_stable_order_by_id(self, client):
        ids = [u["id"] for u in client.get("/api/uses").json()["uses"]]
        assert ids == sorted(ids)

    def test_risk_filter_counts_match_sample(self, client):
        assert len(client.get("/api/uses", params={"risk": "unacceptable"}).json()["uses"]) == 10
        assert len(client.get("/api/uses", params={"risk": "high"}).json()["uses"]) == 66
        assert len(client.get("/api/uses", params={"risk": "limited-low"}).json()["uses"]) == 62

    def test_unknown_risk_is_400(self, client):
        assert client.get("/api/uses", params={"risk": "catastrophic"}).status_code == 400

    def test_unknown_category_is_400(self, client):
        assert client.get("/api/uses", params={"category": "nonexistent"}).status_code == 400

    def test_query_matches_substring_case_insensitive(self, client, sample_atlas):
        hits = client.get("/api/uses", params={"q": "FRAUD"}).json()["uses"]
        assert hits
        for summary in hits:
            use = sample_atlas.use_by_id(summary["id"])
            haystack = " ".join(
                [use.short_description, use.long_description, *use.components()]
            ).casefold()
            assert "fraud" in haystack

    def test_filters_conjunctive_and_subset(self, client):
        everything = {u["id"] for u in client.get("/api/uses").json()["uses"]}
        filtered = client.get(
            "/api/uses", params={"risk": "high", "category": "use:daily", "q": "facial"}
        ).json()["uses"]
        assert {u["id"] for u in filtered} <= everything
        high_only = {u["id"] for u in client.get("/api/uses", params={"risk": "high"}).json()["uses"]}
        assert {u["id"] for u in filtered} <= high_only

    def test_summaries_carry_both_coordinate_sets(self, client, sample_atlas):
        summary = client.get("/api/uses").json()["uses"][0]
        assert {"x", "y", "split_x", "split_y"} <= set(summary)
        assert (summary["x"], summary["y"]) == sample_atlas.coords[summary["id"]]


class TestUseDetail:
    def test_layer_grouped_card(self, client, sample_atlas):
        uid = sample_atlas.uses[0].id
        body = client.get(f"/api/uses/{uid}").json()
        assert set(body["card"]["risks"]) == {"capability", "human-interaction", "systemic-impact"}
        assert set(body["card"]["benefits"]) == {"capability", "human-interaction", "systemic-impact"}
        assert body["use"] == use_to_jsonable(sample_atlas.uses[0])

    def test_unknown_id_404(self, client):
        assert client.get("/api/uses/use-doesnotexist").status_code == 404

    def test_detail_stable_across_calls(self, client, sample_atlas):
        uid = sample_atlas.uses[7].id
        first = client.get(f"/api/uses/{uid}")
        second = client.get(f"/api/uses/{uid}")
        assert first.content == second.content

    def test_affected_checkmarks_present(self, client, sample_atlas):
        for use in sample_atlas.uses:
            if use.risk_level is RiskLevel.HIGH:
                body = client.get(f"/api/uses/{use.id}").json()
                items = [i for group in body["card"]["risks"].values() for i in group]
                assert items
                assert all(i["affected"] for i in items)
                break


class TestReadOnlyContract:
    def test_repeated_requests_byte_identical(self, client):
        a = client.get("/api/uses", params={"risk": "high"})
        b = client.get("/api/uses", params={"risk": "high"})
        assert a.content == b.content

    def test_no_write_endpoints(self, client):
        assert client.post("/api/uses", json={}).status_code in (404, 405)
        assert client.delete("/api/meta").status_code in (404, 405)

    def test_body_is_canonical_json(self, client):
        content = client.get("/api/meta").content
        # canonical form: sorted keys, trailing newline
        assert content.endswith(b"\n")
        obj = json.loads(content)
        assert list(obj) == sorted(obj)


class TestStartup:
    def test_config_parses_atlas_at_startup(self, sample_atlas_path):
        from atlas_forge.service import ServiceConfig, app_from_config

        app = app_from_config(ServiceConfig(atlas_path=str(sample_atlas_path)))
        assert TestClient(app).get("/api/meta").json()["use_count"] == 138

    def test_bad_atlas_fails_startup(self, tmp_path):
        from atlas_forge.serialization import AtlasFormatError
        from atlas_forge.service import ServiceConfig, app_from_config

        bad = tmp_path / "bad.json"
        bad.write_text("{}")
        with pytest.raises(AtlasFormatError):
            app_from_config(ServiceConfig(atlas_path=str(bad)))
