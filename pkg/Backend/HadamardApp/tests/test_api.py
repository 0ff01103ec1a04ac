from rest_framework import status
from rest_framework.test import APITestCase

from HadamardApp.models import VerificationRun

from .fixtures import CAYLEY_123


class PingTests(APITestCase):
    def test_ping(self):
        response = self.client.get("/api/ping/")
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertTrue(response.json()["ok"])


class VerifyApiTests(APITestCase):
    def test_run_is_stored(self):
        response = self.client.post("/api/verify", {"m": 3, "trials": 10, "field": "rational", "seed": 7}, format="json")
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        body = response.json()
        self.assertTrue(body["property_holds"])
        self.assertEqual(body["report"]["histogram"], {"2": 10})
        run = VerificationRun.objects.get(pk=body["run_id"])
        self.assertEqual(run.digest, body["report"]["digest"])

    def test_runs_are_filterable(self):
        self.client.post("/api/verify/", {"m": 3, "trials": 3}, format="json")
        self.client.post("/api/verify/", {"m": 4, "trials": 3, "field": "gaussian-rational"}, format="json")
        response = self.client.get("/api/runs/", {"field": "gaussian-rational"})
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        rows = response.json()
        self.assertEqual(len(rows), 1)
        self.assertEqual(rows[0]["size"], 4)
        self.assertEqual(len(self.client.get("/api/runs/", {"violation": "false"}).json()), 2)

    def test_invalid_size(self):
        response = self.client.post("/api/verify", {"m": 1}, format="json")
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertEqual(response.json()["error"], "ValidationError")

    def test_sampler_mismatch(self):
        response = self.client.post("/api/verify", {"m": 3, "trials": 2, "sampler": "rnc-family"}, format="json")
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertEqual(response.json()["error"], "DimensionMismatchError")


class ConstructApiTests(APITestCase):
    def test_certificate(self):
        response = self.client.post("/api/construct", {"n": 2, "p0": [1, 1, 1], "nodes": [0, 1, 2]}, format="json")
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertTrue(response.json()["certificate"]["valid"])

    def test_blown_down(self):
        response = self.client.post("/api/construct", {"n": 2, "p0": [1, 0, 1], "nodes": [0, 1, 2]}, format="json")
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertEqual(response.json()["error"], "BlownDownHyperplaneError")


class TransformApiTests(APITestCase):
    def test_cremona(self):
        response = self.client.post("/api/transforms/cremona", [[1, 2, 4]], format="json")
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.json()["integer_images"], [[4, 2, 1]])

    def test_selfassoc(self):
        points = [[1, 0, 0], [0, 1, 0], [0, 0, 1]] + [[r[j] for r in CAYLEY_123] for j in range(3)]
        response = self.client.post("/api/transforms/selfassoc/", {"points": points, "split_index": 3}, format="json")
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        body = response.json()
        self.assertTrue(body["property_holds"])
        self.assertEqual(body["quadric"], [["1/1", "0/1", "0/1"], ["0/1", "1/1", "0/1"], ["0/1", "0/1", "1/1"]])

    def test_malformed_points(self):
        response = self.client.post("/api/transforms/conic", [["x", 1, 1]], format="json")
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertEqual(response.json()["error"], "EncodingError")

    def test_unknown_transform(self):
        response = self.client.post("/api/transforms/nope", [], format="json")
        self.assertEqual(response.status_code, status.HTTP_404_NOT_FOUND)


class BoundApiTests(APITestCase):
    def test_single(self):
        response = self.client.get("/api/bound", {"m": 6})
        self.assertEqual(response.json()["rows"][0]["min_rank_bound"], 2)

    def test_range(self):
        response = self.client.get("/api/bound/", {"lo": 2, "hi": 4})
        self.assertEqual([row["m"] for row in response.json()["rows"]], [2, 3, 4])
