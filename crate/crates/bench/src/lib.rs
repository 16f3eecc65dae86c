//! Criterion benchmarks for the chain operations live in `benches/`.
