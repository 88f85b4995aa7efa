//! Counter-based random streams: every draw is addressed by (seed, stream,
//! index), so disorder realizations do not depend on evaluation order.

use kcomb::dimer::*;

fn main() {
    let seed = derive_seed(&[1, 0, 3]);
    println!("derived seed {seed:#018x}");
    for stream in [Stream::Detuning, Stream::Coupling] {
        let draws: Vec<String> = (0..4).map(|i| format!("{:+.4}", keyed_uniform(seed, stream, i))).collect();
        println!("{stream:?}: {}", draws.join(" "));
    }
    // Same address, same value, whatever was drawn before.
    assert_eq!(keyed_uniform(seed, Stream::Coupling, 2), keyed_uniform(seed, Stream::Coupling, 2));

    let grid = RingGrid::new(16).unwrap();
    let base = LLEParams::new(0.5, 1.5, 0.1).with_coupling(CouplingProfile::Cosine { a0: 0.2, a1: 0.1, scale: 1 });
    let spec = DisorderSpec { strength: 0.1, seed, targets: vec![DisorderTarget::Detuning, DisorderTarget::Coupling] };
    let p = apply_disorder(&base, &spec, &grid).unwrap();
    println!("detuning factors {:?}", p.detuning_factors);
    let before = base.coupling.values(&grid);
    let after = p.coupling.values(&grid);
    for (k, (b, a)) in grid.modes().zip(before.iter().zip(&after)).step_by(4) {
        println!("k = {k:>3}: a(k) {b:.4} -> {a:.4}");
    }
}
