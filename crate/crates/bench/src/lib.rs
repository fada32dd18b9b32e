//! Criterion benchmarks for the circmat pipeline live in `benches/`.
