# CHSH statistic, per-configuration values, geometric-phase cycle and setting composition
