from toricmmp import rc
rc.__config__["!SIM.tests.run_integration_tests"] = True
rc.__config__["!SIM.random.seed"] = 0
