# HadamardApp/views.py
from __future__ import annotations

import logging
import traceback

from rest_framework import permissions, serializers, status, viewsets
from rest_framework.response import Response
from rest_framework.views import APIView

from django_filters.rest_framework import DjangoFilterBackend

from . import conf
from .Algebra import runs
from .Algebra.codec import decode_config, decode_split_config
from .Algebra.exceptions import AlgebraError
from .Algebra.kontsevich import FIELD_LABELS, Method
from .models import VerificationRun

logger = logging.getLogger(__name__)


# ----------------------------
# Serializers
# ----------------------------
class VerificationRunSerializer(serializers.ModelSerializer):
    class Meta:
        model = VerificationRun
        fields = ["id", "size", "field", "method", "trials", "seed", "relative_tol",
                  "rank3_count", "rank1_count", "violation", "digest", "report", "created"]


class VerifyRequestSerializer(serializers.Serializer):
    m = serializers.IntegerField(min_value=2)
    trials = serializers.IntegerField(min_value=1, max_value=100000, default=100)
    field = serializers.ChoiceField(choices=FIELD_LABELS, default="rational")
    seed = serializers.IntegerField(default=0)
    tol = serializers.FloatField(required=False, allow_null=True, default=None)
    sampler = serializers.ChoiceField(choices=[m.value for m in Method], required=False, allow_null=True, default=None)


class ConstructRequestSerializer(serializers.Serializer):
    n = serializers.IntegerField(min_value=1)
    field = serializers.ChoiceField(choices=("real", "complex"), default="real")
    seed = serializers.IntegerField(default=0)
    p0 = serializers.ListField(child=serializers.FloatField(), required=False, allow_null=True, default=None)
    nodes = serializers.ListField(child=serializers.FloatField(), required=False, allow_null=True, default=None)
    tol = serializers.FloatField(required=False, allow_null=True, default=None)


# ----------------------------
# ViewSets
# ----------------------------
class VerificationRunViewSet(viewsets.ReadOnlyModelViewSet):
    """
    Stored verifier runs, newest first.
    GET /api/runs/?size=4&field=rational&violation=false
    """
    queryset = VerificationRun.objects.all().order_by("-created", "-id")
    serializer_class = VerificationRunSerializer
    permission_classes = [permissions.AllowAny]
    filter_backends = [DjangoFilterBackend]
    filterset_fields = ["size", "field", "violation"]


# ----------------------------
# Utilities / Debug
# ----------------------------
class PingView(APIView):
    permission_classes = [permissions.AllowAny]

    def get(self, request):
        return Response({"ok": True, "where": "HadamardApp.views.PingView"})


# ----------------------------
# Computations
# ----------------------------
def _bad_request(error: str, message: str, **extra) -> Response:
    return Response({"ok": False, "error": error, "message": message, **extra}, status=status.HTTP_400_BAD_REQUEST)


class HadamardAPIView(APIView):
    """
    Runs ``compute(request)`` and wraps the result:
      success         → 200 {"ok": true, ...payload}
      AlgebraError    → 400 {"ok": false, "error": <class>, "message": ...}
      anything else   → 500 with the last lines of the traceback
    """
    permission_classes = [permissions.AllowAny]

    def compute(self, request):
        raise NotImplementedError

    def handle_request(self, request):
        try:
            payload, ok = self.compute(request)
            body = {"ok": True, "property_holds": ok}
            body.update(payload)
            return Response(body, status=status.HTTP_200_OK)
        except serializers.ValidationError as e:
            return _bad_request("ValidationError", "invalid request body", details=e.detail)
        except (AlgebraError, ValueError) as e:
            logger.info("%s rejected input: %s", type(self).__name__, e)
            return _bad_request(type(e).__name__, str(e))
        except Exception as e:
            tb = traceback.format_exc()
            logger.exception("%s failed: %s", type(self).__name__, e)
            # Return JSON so clients can see *why* it failed (instead of blank 500)
            return Response(
                {
                    "ok": False,
                    "error": type(e).__name__,
                    "message": str(e),
                    "trace": tb.splitlines()[-30:],
                },
                status=status.HTTP_500_INTERNAL_SERVER_ERROR,
            )


class VerifyView(HadamardAPIView):
    """
    POST /api/verify
    Body JSON: {"m": 4, "trials": 100, "field": "rational", "seed": 7, "tol": null, "sampler": null}
    Every run is stored as a VerificationRun; the response carries its id.
    """

    def post(self, request):
        return self.handle_request(request)

    def compute(self, request):
        params = VerifyRequestSerializer(data=request.data or {})
        params.is_valid(raise_exception=True)
        data = params.validated_data
        payload, ok = runs.run_verify(
            data["m"],
            data["trials"],
            data["field"],
            data["seed"],
            conf.tolerance(data["tol"]),
            method=Method(data["sampler"]) if data["sampler"] else None,
            bounds=conf.sampler_bounds(),
            workers=conf.workers(),
        )
        run = VerificationRun.from_report(payload)
        return {"run_id": run.pk, "report": payload}, ok


class ConstructView(HadamardAPIView):
    """
    POST /api/construct
    Body JSON: {"n": 2, "field": "real", "p0": [1, 1, 1], "nodes": [0, 1, 2]}  (p0/nodes optional, seeded)
    """

    def post(self, request):
        return self.handle_request(request)

    def compute(self, request):
        params = ConstructRequestSerializer(data=request.data or {})
        params.is_valid(raise_exception=True)
        data = params.validated_data
        payload, ok = runs.run_construct(
            data["n"], data["field"], data["seed"], p0=data["p0"], nodes=data["nodes"],
            tol=conf.tolerance(data["tol"]),
        )
        return {"certificate": payload}, ok


class TransformView(HadamardAPIView):
    """
    POST /api/transforms/<name>   name ∈ cremona, gale, conic, quadrics, selfassoc
    Body JSON: the configuration the matching management command reads with --in
    (a list of points, or {"points": [...], "split_index": ...} for gale/selfassoc).
    """
    SPLIT = {"gale": runs.run_gale, "selfassoc": runs.run_selfassoc}
    PLAIN = {"cremona": runs.run_cremona, "conic": runs.run_conic, "quadrics": runs.run_quadrics}

    def post(self, request, name):
        if name not in self.SPLIT and name not in self.PLAIN:
            return Response(
                {"ok": False, "error": "NotFound", "message": f"unknown transform {name!r}"},
                status=status.HTTP_404_NOT_FOUND,
            )
        self.name = name
        return self.handle_request(request)

    def compute(self, request):
        data = request.data
        tol = conf.tolerance(request.query_params.get("tol") and float(request.query_params["tol"]))
        if self.name in self.SPLIT:
            if isinstance(data, list):
                data = {"points": data}
            return self.SPLIT[self.name](decode_split_config(data), tol)
        if isinstance(data, dict):
            data = data.get("points")
        return self.PLAIN[self.name](decode_config(data), tol)


class BoundView(HadamardAPIView):
    """
    GET /api/bound?m=10   or   GET /api/bound?lo=2&hi=12
    """

    def get(self, request):
        return self.handle_request(request)

    def compute(self, request):
        q = request.query_params
        if "m" in q:
            ms = [int(q["m"])]
        else:
            ms = range(int(q.get("lo", 2)), int(q.get("hi", 12)) + 1)
        return runs.run_bound(ms)
