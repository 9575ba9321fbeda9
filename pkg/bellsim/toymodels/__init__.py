# Conditional-probability toy tables and local-polytope feasibility
