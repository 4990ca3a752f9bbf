"""Pure computations: Picard lattice, cohomology, invariants, walls, crossing, stability."""
