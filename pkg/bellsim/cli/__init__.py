# Command router, run configuration schemas and CSV/JSON writers
