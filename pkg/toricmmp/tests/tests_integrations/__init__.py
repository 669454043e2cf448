import pytest
from toricmmp import rc

if rc.__config__["!SIM.tests.run_integration_tests"] is False:
    pytestmark = pytest.mark.skip("Ignoring the random instance suites")
