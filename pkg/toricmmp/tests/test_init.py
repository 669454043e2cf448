import os
import yaml

from toricmmp import __version__, rc


class TestBasicLoading:
    def test_pkg_dir_in_search_path(self):
        assert rc.__pkg_dir__ in rc.__search_path__

    def test_bundled_instances_in_search_path(self):
        path = os.path.join(rc.__pkg_dir__, "data", "instances")
        assert path in rc.__search_path__

    def test_defaults_config_file_is_read_in(self):
        assert rc.__config__["!SIM.reports.verbose"] is False
        assert rc.__config__["!MMP.rescale_scaling_divisor"] is False

    def test_has_version_info(self):
        assert __version__


class TestDefaultsYamlFile:
    def test_default_yaml_file_exists(self):
        assert os.path.exists(os.path.join(rc.__pkg_dir__, "defaults.yaml"))

    def test_every_document_has_an_alias(self):
        default_file = os.path.join(rc.__pkg_dir__, "defaults.yaml")
        with open(default_file, "r") as f:
            dicts = [dic for dic in yaml.safe_load_all(f)]
        aliases = [dic["alias"] for dic in dicts]
        for alias in ["SIM", "LP", "MMP", "CHAMBERS", "GLUE"]:
            assert alias in aliases
