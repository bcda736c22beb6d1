"""
Tests for the built-in jobs
"""

import pytest

from src.qdeform.algebra.yd import validate
from src.qdeform.utils.presets import get_preset, is_preset, preset_names, sl3, uq_sl2_root_of_unity
from src.qdeform.utils.spec_loader import SpecParseError


class TestPresetNames:

    def test_known_names(self):
        names = preset_names()
        assert "sl2" in names
        assert "sl3-plus" in names
        assert "uq-sl2-N5" in names

    def test_root_of_unity_names_are_patterns(self):
        assert is_preset("uq-sl2-N7")
        assert is_preset("uq-sl2-N9-zero")
        assert not is_preset("uq-sl2-Nx")
        assert not is_preset("sl4")

    def test_unknown_preset(self):
        with pytest.raises(SpecParseError) as excinfo:
            get_preset("sl4")
        assert "known:" in excinfo.value.reason


class TestPresetData:

    @pytest.mark.parametrize("name", ["sl2", "sl2-zero", "sl3", "sl3-zero", "sl3-plus", "uq-sl2-N5"])
    def test_presets_validate(self, name):
        job = get_preset(name)
        assert validate(job.datum, job.links).passed

    def test_sl2_characters(self, sl2_job, q):
        datum = sl2_job.datum
        f, e = datum.index("f"), datum.index("e")
        assert datum.q(e, f) == q ** -2
        assert datum.q(f, e) == q ** 2
        assert datum.q(e, e) == q ** 2
        assert datum.q(f, f) == q ** -2

    def test_zero_suffix_clears_links(self, sl2_zero_job):
        assert sl2_zero_job.links.is_zero()
        assert sl2_zero_job.name == "sl2-zero"

    def test_sl3_serre_relations(self, sl3_job):
        assert len(sl3_job.relations) == 4
        assert sl3_job.relations[0] == "serre(f1, f2, -1)"
        assert len(sl3_job.extra) == 4

    def test_sl3_with_degree(self):
        assert sl3(degree=3).degree == 3


class TestRootOfUnity:

    def test_field_and_group(self, uq5_job):
        assert uq5_job.datum.group.torsion == (("K", 5),)
        assert uq5_job.degree == 10
        assert uq5_job.relations == ("e^5", "f^5")

    def test_q_is_a_fifth_root_of_unity(self, uq5_job):
        datum = uq5_job.datum
        e = datum.index("e")
        assert datum.q(e, e) ** 5 == 1
        assert not datum.q(e, e).is_one

    @pytest.mark.parametrize("order", [2, 3, 4, 6])
    def test_unsupported_orders(self, order):
        with pytest.raises(SpecParseError):
            uq_sl2_root_of_unity(order)
