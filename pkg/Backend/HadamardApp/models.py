from django.db import models


class VerificationRun(models.Model):
    """
    One verifier run: the sampled size, backend and seed, the rank counts that
    matter, and the full JSON report (its digest identifies the run).
    """
    size = models.PositiveSmallIntegerField()
    field = models.CharField(max_length=24)            # rational, gaussian-rational, real, complex
    method = models.CharField(max_length=24, default="cayley")
    trials = models.PositiveIntegerField()
    seed = models.BigIntegerField()
    relative_tol = models.FloatField(default=1e-8)
    rank3_count = models.PositiveIntegerField(default=0)
    rank1_count = models.PositiveIntegerField(default=0)
    violation = models.BooleanField(default=False)
    digest = models.CharField(max_length=64)
    report = models.JSONField()
    created = models.DateTimeField(auto_now_add=True)

    class Meta:
        indexes = [
            models.Index(fields=["size", "field"], name="run_size_field_idx"),
        ]
        ordering = ["-created", "-id"]

    def __str__(self) -> str:
        return f"m={self.size} {self.field} × {self.trials} (seed {self.seed})"

    @classmethod
    def from_report(cls, report: dict) -> "VerificationRun":
        """Persist a report dict as produced by ``VerifierReport.to_dict``."""
        return cls.objects.create(
            size=report["size"],
            field=report["field"],
            method=report["method"],
            trials=report["trials"],
            seed=report["seed"],
            relative_tol=report["tolerance"],
            rank3_count=report["rank3_count"],
            rank1_count=report["rank1_count"],
            violation=report["violation_count"] > 0,
            digest=report["digest"],
            report=report,
        )
