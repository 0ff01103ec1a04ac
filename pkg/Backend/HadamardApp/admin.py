from django.contrib import admin

from .models import VerificationRun


@admin.register(VerificationRun)
class VerificationRunAdmin(admin.ModelAdmin):
    list_display = ("id", "size", "field", "method", "trials", "seed", "rank3_count", "violation", "created")
    list_filter = ("field", "violation")
    search_fields = ("digest",)
    ordering = ("-created",)
    readonly_fields = ("digest", "report", "created")
