import os

import pytest

from toricmmp.exceptions import InstanceError
from toricmmp.commands.instance import parse_instance, load_instance

MOCK_PATH = os.path.abspath(os.path.join(os.path.dirname(__file__),
                                         "../mocks/instances/"))

F1_TEXT = """{
  "format": 1,
  "name": "f1",
  "rays": [[1, 0], [1, 1], [0, 1], [-1, -1]],
  "cones": [[0, 1], [1, 2], [2, 3], [3, 0]],
  "divisors": {
    "A": [0, 0, 1, 3]
  },
  "params": {"r": "7/8"}
}"""


class TestParseInstance:
    def test_reads_the_f1_instance(self):
        inst = parse_instance(F1_TEXT)
        assert inst.name == "f1"
        assert inst.pair.fan.n_rays == 4
        assert inst.scaling.coeffs == (0, 0, 1, 3)
        assert all(a == 0 for a in inst.divisors["Delta"].coeffs)
        assert str(inst.param("r", rational=True)) == "7/8"

    def test_throws_error_for_wrong_format(self):
        with pytest.raises(InstanceError) as err:
            parse_instance(F1_TEXT.replace('"format": 1', '"format": 2'))
        assert err.value.line == 2

    def test_throws_error_for_short_divisor(self):
        with pytest.raises(InstanceError) as err:
            parse_instance(F1_TEXT.replace("[0, 0, 1, 3]", "[0, 1, 3]"))
        assert err.value.line == 7

    def test_throws_error_for_missing_cones(self):
        text = F1_TEXT.replace('"cones": [[0, 1], [1, 2], [2, 3], [3, 0]],',
                               "")
        with pytest.raises(InstanceError) as err:
            parse_instance(text)
        assert err.value.line == 1

    def test_throws_error_for_bad_ratio(self):
        with pytest.raises(InstanceError) as err:
            parse_instance(F1_TEXT.replace('"7/8"', '"7/0"'))
        assert err.value.line == 9

    def test_instance_without_scaling_has_no_scaling(self):
        inst = parse_instance(F1_TEXT.replace('"A"', '"B"'))
        with pytest.raises(InstanceError):
            inst.scaling


class TestLoadInstance:
    @pytest.mark.parametrize("name", ["f1.json", "p2.json", "quadric.json",
                                      "f1xp1.json"])
    def test_bundled_instances_load(self, name):
        inst = load_instance(name)
        assert inst.pair.fan.is_complete() or inst.pair.is_relative

    def test_relative_instance_has_a_base(self):
        inst = load_instance("f1xp1.json")
        assert inst.pair.is_relative
        assert inst.pair.base.n_rays == 2

    def test_malformed_rays_report_their_line(self):
        with pytest.raises(InstanceError) as err:
            load_instance(os.path.join(MOCK_PATH, "malformed_rays.json"))
        assert err.value.line == 4
        assert "line 4" in str(err.value)

    def test_broken_json_reports_its_line(self):
        with pytest.raises(InstanceError) as err:
            load_instance(os.path.join(MOCK_PATH, "bad_json.json"))
        assert err.value.line == 4

    def test_throws_error_for_missing_file(self):
        with pytest.raises(InstanceError):
            load_instance("no_such_instance.json")
