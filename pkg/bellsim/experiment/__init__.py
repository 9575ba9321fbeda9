# Detector responses, pair simulation and correlations
