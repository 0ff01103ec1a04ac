from django.urls import path, include
from rest_framework.routers import DefaultRouter

from .views import (
    BoundView,
    ConstructView,
    PingView,  # debug helper
    TransformView,
    VerificationRunViewSet,
    VerifyView,
)

app_name = "HadamardApp"

router = DefaultRouter()
router.register(r"runs", VerificationRunViewSet, basename="run")

urlpatterns = [
    path("", include(router.urls)),
    path("ping/", PingView.as_view(), name="ping"),
    # accept BOTH, because a proxy may strip the trailing slash
    path("verify/", VerifyView.as_view(), name="verify-slash"),
    path("verify", VerifyView.as_view(), name="verify-noslash"),
    path("construct/", ConstructView.as_view(), name="construct-slash"),
    path("construct", ConstructView.as_view(), name="construct-noslash"),
    path("transforms/<slug:name>/", TransformView.as_view(), name="transform-slash"),
    path("transforms/<slug:name>", TransformView.as_view(), name="transform-noslash"),
    path("bound/", BoundView.as_view(), name="bound-slash"),
    path("bound", BoundView.as_view(), name="bound-noslash"),
]
