# Hidden-configuration density, its CDF and the counter-based sampler
