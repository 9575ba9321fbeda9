# Flat and spherical triangle games, parallel transport and spherical excess
