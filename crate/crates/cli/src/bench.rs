//! Timing rows for three tuple families.
//!
//! - `boxes`: n axis-parallel boxes with random integer side lengths;
//! - `simplices`: the reduced simplices of n random lattice points in R^1
//!   (n = 2) or R^2 (n >= 3);
//! - `segments`: n random lattice segments, timed with the determinant engine.
//!
//! Only the mixed-volume call is timed, not instance construction.

use std::fmt::Write;
use std::time::Instant;

use mixvol::geometry::{convex_hull, Point, PointConfiguration};
use mixvol::reduction::build_simplices;
use mixvol::{EngineRegistry, MixedVolumeEngine, PolytopeTuple};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::CliError;

pub const HEADER: &str = "family,size,engine,wall_time_us";

fn axis_box(rng: &mut ChaCha8Rng, n: usize) -> mixvol::ConvexPolytope {
    let sides: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=3)).collect();
    let corners = (0..1usize << n)
        .map(|mask| Point::from_ints(&(0..n).map(|j| if mask >> j & 1 == 1 { sides[j] } else { 0 }).collect::<Vec<_>>()))
        .collect();
    convex_hull(&PointConfiguration::from_points(corners).expect("box corners"))
}

fn boxes(rng: &mut ChaCha8Rng, n: usize) -> PolytopeTuple {
    PolytopeTuple::new((0..n).map(|_| axis_box(rng, n)).collect()).expect("n boxes in R^n")
}

fn simplices(rng: &mut ChaCha8Rng, n: usize) -> PolytopeTuple {
    let dim = if n == 2 { 1 } else { 2 };
    let mut pts: Vec<Vec<i64>> = Vec::with_capacity(n);
    while pts.len() < n {
        let p: Vec<i64> = (0..dim).map(|_| rng.gen_range(-3..=3)).collect();
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    let config = PointConfiguration::from_points(pts.iter().map(|p| Point::from_ints(p)).collect())
        .expect("uniform dimension");
    build_simplices(&config).expect("distinct points, m > n").tuple()
}

fn segments(rng: &mut ChaCha8Rng, n: usize) -> PolytopeTuple {
    let polys = (0..n)
        .map(|_| {
            let a: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
            let mut b = a.clone();
            while b == a {
                b = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
            }
            convex_hull(&PointConfiguration::from_points(vec![Point::from_ints(&a), Point::from_ints(&b)]).expect("segment"))
        })
        .collect();
    PolytopeTuple::new(polys).expect("n segments in R^n")
}

fn time(engine: &dyn MixedVolumeEngine, t: &PolytopeTuple, seed: u64) -> Result<u128, CliError> {
    let start = Instant::now();
    engine.mixed_volume(t, seed)?;
    Ok(start.elapsed().as_micros())
}

pub fn run(registry: &EngineRegistry, engine: &dyn MixedVolumeEngine, max_n: usize, seed: u64) -> Result<String, CliError> {
    if engine.name() == "segments" {
        return Err(CliError::Precondition(
            "bench needs an engine that accepts arbitrary polytopes (ie or cells)".into(),
        ));
    }
    let det = registry.get("segments")?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut csv = String::from(HEADER);
    csv.push('\n');
    for n in 2..=max_n {
        let rows = [
            ("boxes", engine, boxes(&mut rng, n)),
            ("simplices", engine, simplices(&mut rng, n)),
            ("segments", det, segments(&mut rng, n)),
        ];
        for (family, e, tuple) in rows {
            let us = time(e, &tuple, seed)?;
            writeln!(csv, "{family},{n},{},{us}", e.name()).expect("writing to a String");
        }
    }
    Ok(csv)
}
