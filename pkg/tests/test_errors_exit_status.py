"""Tests for errors/exit_status.py — exit codes from error categories."""

import dataclasses

import pytest

from acoustic_casimir.errors.exit_status import _CATEGORY_KIND, ExitStatus, get_exit_status


class TestGetExitStatus:
    @pytest.mark.parametrize(
        "category,expected_kind",
        list(_CATEGORY_KIND.items()),
        ids=list(_CATEGORY_KIND),
    )
    def test_all_category_mappings(self, category, expected_kind):
        assert get_exit_status(category).kind == expected_kind

    def test_success(self):
        assert get_exit_status() == ExitStatus(kind="ok", code=0)

    @pytest.mark.parametrize("category", ["configuration", "table"])
    def test_input_errors_exit_2(self, category):
        assert get_exit_status(category).code == 2

    @pytest.mark.parametrize("category", ["domain", "resonance", "method", "quadrature", "unknown"])
    def test_computation_errors_exit_3(self, category):
        assert get_exit_status(category).code == 3


class TestExitStatusFrozen:
    def test_immutable(self):
        status = get_exit_status("domain")
        with pytest.raises(dataclasses.FrozenInstanceError):
            status.code = 0  # type: ignore[misc]
