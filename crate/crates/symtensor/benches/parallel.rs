//! Parallel vs sequential timings for the two data-parallel kernels.
//! Built with the default `parallel` feature the named pairs compare the
//! rayon path against the sequential one; without it both sides run the
//! same sequential code.

use criterion::{criterion_group, criterion_main, Criterion};

use symtensor::perm::Permutation;
use symtensor::tensor::{
    sym_power_diagonal, sym_power_diagonal_serial, sym_power_matrix, sym_power_matrix_serial,
    DenseMatrix,
};

fn rotated_cycle(n: usize) -> Permutation {
    // One long cycle: i -> i + 1, wrapping.
    let image: Vec<usize> = (1..=n).map(|i| i % n + 1).collect();
    Permutation::from_image(image).expect("valid image")
}

fn bench_matrix_power(c: &mut Criterion) {
    let mut group = c.benchmark_group("matrix_power");
    group.sample_size(10);
    for (n, k) in [(6usize, 3usize), (7, 3)] {
        let a = DenseMatrix::from_permutation(&rotated_cycle(n));
        group.bench_function(format!("serial_n{n}_k{k}"), |b| {
            b.iter(|| sym_power_matrix_serial(&a, k).unwrap())
        });
        group.bench_function(format!("default_n{n}_k{k}"), |b| {
            b.iter(|| sym_power_matrix(&a, k).unwrap())
        });
    }
    group.finish();
}

fn bench_diagonal_power(c: &mut Criterion) {
    let mut group = c.benchmark_group("diagonal_power");
    group.sample_size(10);
    for (n, k) in [(20usize, 5usize), (30, 5)] {
        let sigma = rotated_cycle(n);
        group.bench_function(format!("serial_n{n}_k{k}"), |b| {
            b.iter(|| sym_power_diagonal_serial(&sigma, k).unwrap())
        });
        group.bench_function(format!("default_n{n}_k{k}"), |b| {
            b.iter(|| sym_power_diagonal(&sigma, k).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_matrix_power, bench_diagonal_power);
criterion_main!(benches);
