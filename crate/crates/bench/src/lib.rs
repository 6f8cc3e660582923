//! Benchmark-only crate: see `benches/pv.rs`. The package exists so the
//! Criterion benchmarks build against the library without inflating the
//! library's own dev-dependencies.
