from fastapi.testclient import TestClient

from ferrers.service import app

client = TestClient(app)


class TestInfo:
    def test_root_lists_endpoints(self):
        r = client.get("/")
        assert r.status_code == 200
        body = r.json()
        assert body["name"] == "ferrers"
        for path in (
            "/contains",
            "/gf",
            "/wilf-series",
            "/equiv",
            "/chain",
            "/classes",
            "/profile",
            "/closure",
            "/staircases",
            "/augmented",
            "/verify",
        ):
            assert path in body["endpoints"]


class TestContains:
    def test_true_with_oracle(self):
        r = client.post(
            "/contains", json={"sigma": [5, 5, 2, 2, 2], "mu": [2, 1], "oracle": True}
        )
        assert r.status_code == 200
        assert r.json() == {
            "sigma": [5, 5, 2, 2, 2],
            "mu": [2, 1],
            "contains": True,
            "oracle": True,
            "agree": True,
        }

    def test_rectangle_is_false(self):
        r = client.post("/contains", json={"sigma": [4, 4, 4], "mu": [2, 1]})
        assert r.status_code == 200
        assert r.json()["contains"] is False
        assert r.json()["oracle"] is None

    def test_input_is_normalized(self):
        r = client.post("/contains", json={"sigma": [1, 3, 0, 2], "mu": []})
        assert r.status_code == 200
        assert r.json()["sigma"] == [3, 2, 1]

    def test_negative_part_is_unprocessable(self):
        r = client.post("/contains", json={"sigma": [3, -1], "mu": [1]})
        assert r.status_code == 422

    def test_oracle_size_budget_is_unprocessable(self):
        r = client.post(
            "/contains", json={"sigma": [14, 14], "mu": [1], "oracle": True}
        )
        assert r.status_code == 422
        assert "budget" in r.json()["detail"]


class TestGf:
    def test_both_methods_match(self):
        r = client.post("/gf", json={"mu": [1], "k": 1, "n_max": 6, "method": "both"})
        assert r.status_code == 200
        body = r.json()
        assert body["enumerated"] == ["0", "0", "1", "1", "2", "2", "3"]
        assert body["closed"] == body["enumerated"]
        assert body["match"] is True

    def test_zero_offset_notice(self):
        r = client.post("/gf", json={"mu": [2, 1], "k": 0, "n_max": 8, "method": "both"})
        body = r.json()
        assert body["match"] is True
        assert "k=0" in body["notice"]

    def test_degree_zero(self):
        r = client.post("/gf", json={"mu": [1], "k": 1, "n_max": 0, "method": "enum"})
        assert r.json()["enumerated"] == ["0"]

    def test_empty_pattern_rejected(self):
        r = client.post("/gf", json={"mu": [], "k": 1, "n_max": 6})
        assert r.status_code == 422


class TestSeriesAndEquivalence:
    def test_wilf_series_counts_single_box(self):
        r = client.post("/wilf-series", json={"mu": [1], "n_max": 6})
        assert r.json()["coefficients"] == ["0", "1", "2", "3", "5", "7", "11"]

    def test_equiv_modes(self):
        rook = client.post(
            "/equiv", json={"mu": [3, 1], "tau": [2, 2], "mode": "rook"}
        ).json()
        assert rook["equivalent"] is True and rook["verified_up_to"] is None
        wilf = client.post(
            "/equiv", json={"mu": [3, 1], "tau": [2, 2], "mode": "wilf", "n_max": 14}
        ).json()
        assert wilf["equivalent"] is True and wilf["verified_up_to"] == 14
        ww = client.post(
            "/equiv", json={"mu": [3, 1], "tau": [2, 2], "mode": "width-wilf", "n_max": 12}
        ).json()
        assert ww["equivalent"] is False

    def test_chain(self):
        r = client.post("/chain", json={"mu": [3, 1], "tau": [2, 2], "max_steps": 4})
        assert r.json() == {
            "mu": [3, 1],
            "tau": [2, 2],
            "found": True,
            "steps": [{"i": 1, "j": 2}],
        }

    def test_chain_not_found(self):
        r = client.post("/chain", json={"mu": [2, 1], "tau": [1, 1, 1], "max_steps": 5})
        assert r.json()["found"] is False and r.json()["steps"] is None

    def test_classes(self):
        r = client.post("/classes", json={"n": 4})
        classes = [set(map(tuple, cls)) for cls in r.json()["classes"]]
        assert {(3, 1), (2, 2), (2, 1, 1)} in classes
        assert {(4,), (1, 1, 1, 1)} in classes


class TestStructuralEndpoints:
    def test_profile_wire_format(self):
        r = client.post("/profile", json={"partitions": [[2, 1, 1], [2, 2, 1, 1]]})
        assert r.json()["profile"] == [
            {"p": 2, "a": 1, "b": 2},
            {"p": 1, "a": 2, "b": 3},
            {"p": 1, "a": 3, "b": 4},
            {"p": 0, "a": 4, "b": "inf"},
        ]

    def test_profile_requires_a_partition(self):
        r = client.post("/profile", json={"partitions": []})
        assert r.status_code == 422

    def test_closure(self):
        r = client.post("/closure", json={"partitions": [[2, 1, 1], [2, 2, 1, 1]]})
        assert r.json()["closure"] == [[2, 2, 1, 1], [2, 2, 1], [2, 1, 1]]

    def test_staircases(self):
        r = client.post("/staircases", json={"h": 1, "k": 1})
        assert r.json() == {
            "h": 1,
            "k": 1,
            "count": 1,
            "staircases": [[{"p": 1, "a": 1, "b": 1}, {"p": 0, "a": 2, "b": "inf"}]],
        }

    def test_augmented_uses_lambda_alias(self):
        r = client.post("/augmented", json={"mu": [1], "k": 1, "h": 1})
        assert r.json()["structures"] == [
            {"mu": [1], "lambda": [], "off": [1], "weight": 2, "sign": 1}
        ]

    def test_augmented_weight_cap(self):
        full = client.post("/augmented", json={"mu": [2, 1], "k": 2}).json()
        capped = client.post(
            "/augmented", json={"mu": [2, 1], "k": 2, "max_weight": 8}
        ).json()
        assert capped["count"] == sum(1 for s in full["structures"] if s["weight"] <= 8)

    def test_height_context_below_pattern_rejected(self):
        r = client.post("/augmented", json={"mu": [1, 1, 1], "k": 1, "h": 2})
        assert r.status_code == 422


class TestVerifyEndpoint:
    def test_quick_core_suite(self):
        r = client.post("/verify", json={"suite": "core", "quick": True})
        assert r.status_code == 200
        body = r.json()
        assert body["passed"] is True
        assert [c["name"] for c in body["checks"]] == ["containment-oracle-agreement"]

    def test_unknown_suite_is_validation_error(self):
        r = client.post("/verify", json={"suite": "nope"})
        assert r.status_code == 422
