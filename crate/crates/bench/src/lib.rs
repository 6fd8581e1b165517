//! Criterion benchmarks for the exact engines; see `benches/exact.rs`.
