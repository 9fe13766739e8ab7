//! Criterion benchmarks for `monobasis`; see `benches/`.
