use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use groupcodes::ideals::ideal_to_code;
use groupcodes::verify::random_element;
use groupcodes::weights::{css_hermitian, min_distance_isd, IsdConfig};
use groupcodes::{duality, Field, Metric};
use groupcodes_bench::{f9_d16, f9_d16_code};

fn fields(c: &mut Criterion) {
    let f = Field::new(3, 4).unwrap();
    let xs: Vec<_> = (0..81).map(|i| f.from_repr(i)).collect();
    c.bench_function("F_81 mul+add, 81x81", |b| {
        b.iter(|| {
            let mut acc = groupcodes::Elem::ZERO;
            for &x in &xs {
                for &y in &xs {
                    acc = f.add(acc, f.mul(x, y));
                }
            }
            black_box(acc)
        })
    });
}

fn decomposition(c: &mut Criterion) {
    c.bench_function("build F_9[D_16]", |b| b.iter(f9_d16));
    let dec = f9_d16();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let u = random_element(&dec, &mut rng);
    c.bench_function("rho on F_9[D_16]", |b| b.iter(|| dec.rho(black_box(&u))));
    let ru = dec.rho(&u);
    c.bench_function("rho inverse on F_9[D_16]", |b| b.iter(|| dec.rho_inv(black_box(&ru))));
}

fn codes(c: &mut Criterion) {
    let dec = f9_d16();
    let spec = f9_d16_code(&dec);
    c.bench_function("ideal_to_code [32, 12]", |b| b.iter(|| ideal_to_code(&dec, black_box(&spec))));
    c.bench_function("hermitian dual", |b| b.iter(|| duality::dual(&dec, black_box(&spec), Metric::Hermitian)));
    let code = ideal_to_code(&dec, &spec).unwrap();
    let cfg = IsdConfig::default();
    let mut g = c.benchmark_group("distance");
    g.sample_size(10);
    g.bench_function("ISD [32, 12, 12] over F_9", |b| b.iter(|| min_distance_isd(&dec.coeff, &code.generator, None, &cfg)));
    g.bench_function("CSS [[32, 8, 8]]_3", |b| b.iter(|| css_hermitian(&dec, &spec, &cfg)));
    g.finish();
}

criterion_group!(benches, fields, decomposition, codes);
criterion_main!(benches);
