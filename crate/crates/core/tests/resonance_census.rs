//! Sampled classification of H¹(M) over Q(ζ_6): a class is resonant exactly
//! when it lies in one of the emitted components. Resonance is decided by an
//! independent model of A² as Λ²(K^d) modulo the boundaries of dependent
//! triples.

mod common;

use arrangement_core::arrgeo::{intersection_lattice, validate_arrangement, Arrangement, Lattice};
use arrangement_core::exact::{rank, Cyclo, MatrixF};
use arrangement_core::multinet::{enumerate_multinets, EnumerationOptions, MultinetStructure};
use arrangement_core::oscohom::{resonance_components, H1Vector, Os2, Provenance, ResonanceComponent};
use common::*;
use rand::Rng;

const ORDER: u32 = 6;

struct ExteriorModel {
    d: usize,
    pairs: Vec<(usize, usize)>,
    relations: Vec<Vec<Cyclo>>,
}

impl ExteriorModel {
    fn new(lattice: &Lattice) -> Self {
        let d = lattice.d();
        let pairs: Vec<(usize, usize)> = (0..d).flat_map(|i| (i + 1..d).map(move |j| (i, j))).collect();
        let idx = |i: usize, j: usize| pairs.iter().position(|&p| p == (i, j)).unwrap();
        let mut relations = Vec::new();
        for p in lattice.points() {
            let inc = &p.incident;
            for a in 0..inc.len() {
                for b in a + 1..inc.len() {
                    for c in b + 1..inc.len() {
                        let (i, j, k) = (inc[a], inc[b], inc[c]);
                        let mut row = vec![Cyclo::zero(ORDER); pairs.len()];
                        row[idx(j, k)] = Cyclo::from_int(ORDER, 1);
                        row[idx(i, k)] = Cyclo::from_int(ORDER, -1);
                        row[idx(i, j)] = Cyclo::from_int(ORDER, 1);
                        relations.push(row);
                    }
                }
            }
        }
        ExteriorModel { d, pairs, relations }
    }

    fn wedge(&self, i: usize, alpha: &[Cyclo]) -> Vec<Cyclo> {
        let mut row = vec![Cyclo::zero(ORDER); self.pairs.len()];
        for (j, a) in alpha.iter().enumerate() {
            if j == i || a.is_zero() {
                continue;
            }
            let (lo, hi, neg) = if i < j { (i, j, false) } else { (j, i, true) };
            let k = self.pairs.iter().position(|&p| p == (lo, hi)).unwrap();
            row[k] = if neg { &row[k] - a } else { &row[k] + a };
        }
        row
    }

    fn aomoto_h1(&self, alpha: &[Cyclo]) -> usize {
        if alpha.iter().all(Cyclo::is_zero) {
            return self.d - 1;
        }
        let rel_rank = rank(&MatrixF::from_rows(ORDER, self.relations.clone()));
        let mut rows = self.relations.clone();
        rows.extend((0..self.d).map(|i| self.wedge(i, alpha)));
        let image = rank(&MatrixF::from_rows(ORDER, rows)) - rel_rank;
        self.d - image - 1
    }
}

fn int_arr(name: &str, rows: &[[i64; 3]]) -> Arrangement {
    let raw: Vec<[Cyclo; 3]> = rows
        .iter()
        .map(|r| [Cyclo::from_int(1, r[0]), Cyclo::from_int(1, r[1]), Cyclo::from_int(1, r[2])])
        .collect();
    validate_arrangement(name, &raw, 1).unwrap()
}

fn all_multinets(a: &Arrangement, lat: &Lattice) -> Vec<MultinetStructure> {
    let mut out = Vec::new();
    for k in [3, 4] {
        let opts = EnumerationOptions { max_support: Some(a.d()), ..EnumerationOptions::new(k) };
        out.extend(enumerate_multinets(a, lat, &opts).unwrap());
    }
    out
}

fn random_h1(rng: &mut rand_chacha::ChaCha8Rng, d: usize, support: &[usize]) -> Vec<Cyclo> {
    let mut a = vec![Cyclo::zero(ORDER); d];
    for &i in &support[1..] {
        a[i] = small_cyclo(rng, ORDER);
    }
    let s = a.iter().fold(Cyclo::zero(ORDER), |s, x| &s + x);
    a[support[0]] = -s;
    a
}

fn sample_in(rng: &mut rand_chacha::ChaCha8Rng, comp: &ResonanceComponent) -> Vec<Cyclo> {
    let d = comp.span[0].d();
    let mut a = vec![Cyclo::zero(ORDER); d];
    for v in &comp.span {
        let c = small_cyclo(rng, ORDER);
        for (x, y) in a.iter_mut().zip(v.coords()) {
            *x = &*x + &(&c * y);
        }
    }
    a
}

/// Classifies 1000 samples; returns how many were resonant.
fn census(a: &Arrangement, seed: u64) -> (Vec<ResonanceComponent>, usize) {
    let mut rng = rng(seed);
    let lat = intersection_lattice(a);
    let comps = resonance_components(&lat, &all_multinets(a, &lat));
    let model = ExteriorModel::new(&lat);
    let os = Os2::new(&lat);
    let d = a.d();
    let mut resonant = 0;
    for s in 0..1000 {
        let alpha = match s % 10 {
            0..=3 if !comps.is_empty() => {
                let c = &comps[rng.gen_range(0..comps.len())];
                sample_in(&mut rng, c)
            }
            4 if comps.len() >= 2 => {
                let (i, j) = (rng.gen_range(0..comps.len()), rng.gen_range(0..comps.len()));
                let u = sample_in(&mut rng, &comps[i]);
                let v = sample_in(&mut rng, &comps[j]);
                u.iter().zip(&v).map(|(x, y)| x + y).collect()
            }
            5..=7 => {
                let k = rng.gen_range(2..=4.min(d));
                let mut support: Vec<usize> = (0..d).collect();
                for i in 0..k {
                    let j = rng.gen_range(i..d);
                    support.swap(i, j);
                }
                random_h1(&mut rng, d, &support[..k])
            }
            _ => random_h1(&mut rng, d, &(0..d).collect::<Vec<_>>()),
        };
        if alpha.iter().all(Cyclo::is_zero) {
            continue;
        }
        let v = H1Vector::new(alpha.clone()).unwrap();
        let oracle = model.aomoto_h1(&alpha);
        assert_eq!(os.aomoto_h1(&v).unwrap(), oracle, "{}: {alpha:?}", a.name());
        let in_union = comps.iter().any(|c| c.contains(&v));
        assert_eq!(in_union, oracle >= 1, "{}: {alpha:?}", a.name());
        resonant += usize::from(in_union);
    }
    (comps, resonant)
}

#[test]
fn braid_census() {
    let (comps, resonant) = census(&arr("A3"), 41);
    assert_eq!(comps.len(), 5);
    let local = comps.iter().filter(|c| matches!(c.provenance, Provenance::Local { .. })).count();
    assert_eq!(local, 4);
    assert!(comps.iter().all(|c| c.dimension == 2));
    assert!(resonant > 0);
}

#[test]
fn braid_plus_one_line() {
    // A3 together with x + y: the A3 net survives as a subarrangement net.
    let a = int_arr("A3+1", &[[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, -1, 0], [0, 1, -1], [1, 0, -1], [1, 1, 0]]);
    let (comps, _) = census(&a, 42);
    assert!(comps.iter().any(|c| matches!(c.provenance, Provenance::Multinet { .. })));
}

#[test]
fn one_triple_point() {
    let a = int_arr("triple+2", &[[1, 0, 0], [0, 1, 0], [1, 1, 0], [0, 0, 1], [1, 2, 3]]);
    let (comps, _) = census(&a, 43);
    assert_eq!(comps.len(), 1);
    assert_eq!(comps[0].dimension, 2);
}

#[test]
fn generic_four_lines() {
    let a = int_arr("generic4", &[[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]]);
    let (comps, resonant) = census(&a, 44);
    assert!(comps.is_empty());
    assert_eq!(resonant, 0);
}
