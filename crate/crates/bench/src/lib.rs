//! Benchmarks for the solvers live in `benches/`.
