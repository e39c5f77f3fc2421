use std::hint::black_box;

use bn_lemma::evaluation::score_sentences;
use bn_lemma::pipeline::{
    lemmatize_batch, lemmatize_batch_sequential, read_tagged, ReadOptions, TaggedToken,
};
use bn_lemma::{MarkerCategory, PosClass, ResourceBundle};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

fn corpus(resources: &ResourceBundle, sentences: usize) -> Vec<Vec<TaggedToken>> {
    let mut rng = StdRng::seed_from_u64(7);
    let stems: Vec<(PosClass, String)> = PosClass::CLUSTERED
        .iter()
        .flat_map(|&p| {
            let mut words: Vec<String> = resources
                .dictionary
                .cluster(p)
                .iter()
                .map(|(w, _)| w.to_string())
                .collect();
            words.sort();
            words.into_iter().map(move |w| (p, w))
        })
        .collect();
    let markers: Vec<String> = MarkerCategory::ALL
        .iter()
        .flat_map(|&c| resources.markers.get(c).to_vec())
        .collect();
    (0..sentences)
        .map(|_| {
            (0..rng.gen_range(5..20))
                .map(|_| {
                    let (pos, stem) = stems.choose(&mut rng).unwrap();
                    let mut w = stem.clone();
                    for _ in 0..rng.gen_range(0..3) {
                        w.push_str(markers.choose(&mut rng).unwrap());
                    }
                    TaggedToken::new(w, *pos)
                })
                .collect()
        })
        .collect()
}

fn bench_lemmatize(c: &mut Criterion) {
    let resources = ResourceBundle::sample();
    let mut group = c.benchmark_group("lemmatize_batch");
    for n in [100, 1_000, 10_000] {
        let sentences = corpus(&resources, n);
        let tokens: usize = sentences.iter().map(Vec::len).sum();
        group.throughput(Throughput::Elements(tokens as u64));
        group.bench_with_input(BenchmarkId::new("sequential", n), &sentences, |b, s| {
            b.iter(|| lemmatize_batch_sequential(black_box(s), &resources))
        });
        group.bench_with_input(BenchmarkId::new("parallel", n), &sentences, |b, s| {
            b.iter(|| lemmatize_batch(black_box(s), &resources))
        });
    }
    group.finish();
}

fn bench_eval(c: &mut Criterion) {
    let resources = ResourceBundle::sample();
    let golden = include_str!("../data/golden.tsv").repeat(500);
    let doc = read_tagged(golden.as_bytes(), &resources, &ReadOptions::default()).unwrap();
    let predicted = bn_lemma::lemmatize_tagged_file(&doc, &resources);
    c.bench_function("score_sentences/golden_x500", |b| {
        b.iter(|| score_sentences(black_box(&doc.sentences), black_box(&predicted)).unwrap())
    });
}

criterion_group!(benches, bench_lemmatize, bench_eval);
criterion_main!(benches);
