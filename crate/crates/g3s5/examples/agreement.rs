use g3s5::formula::Formula;
use g3s5::kripke::decide_validity;
use g3s5::search::{prove_formula, SearchConfig};

// Small deterministic generator: formulas over <=3 atoms, modal depth
// <=2, size <=10, from a fixed-seed linear congruential stream.
struct Rng(u64);
impl Rng {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        self.0 >> 33
    }
    fn below(&mut self, n: u64) -> u64 { self.next() % n }
}

fn gen(rng: &mut Rng, size: usize, depth: usize) -> Formula {
    let atoms = ["p", "q", "r"];
    if size <= 1 {
        return match rng.below(4) {
            0 => Formula::Bottom,
            _ => Formula::atom(atoms[rng.below(3) as usize]),
        };
    }
    let max_op = if depth == 0 { 5 } else { 7 };
    match rng.below(max_op) {
        0 => Formula::atom(atoms[rng.below(3) as usize]),
        1 => Formula::not(gen(rng, size - 1, depth)),
        2 => { let l = 1 + rng.below((size - 1) as u64) as usize; Formula::and(gen(rng, l, depth), gen(rng, size - 1 - l.min(size-2), depth)) }
        3 => { let l = 1 + rng.below((size - 1) as u64) as usize; Formula::or(gen(rng, l, depth), gen(rng, size - 1 - l.min(size-2), depth)) }
        4 => { let l = 1 + rng.below((size - 1) as u64) as usize; Formula::implies(gen(rng, l, depth), gen(rng, size - 1 - l.min(size-2), depth)) }
        5 => Formula::dia(gen(rng, size - 1, depth - 1)),
        _ => Formula::boxed(gen(rng, size - 1, depth - 1)),
    }
}

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(500);
    let mut rng = Rng(0x5eed_cafe);
    let cfg = SearchConfig::default();
    let t0 = std::time::Instant::now();
    let mut valid_count = 0;
    let mut disagreements = 0;
    let mut worst = std::time::Duration::ZERO;
    for i in 0..n {
        let sz = 2 + (rng.below(9) as usize);
        let f = gen(&mut rng, sz, 2);
        let t = std::time::Instant::now();
        let proved = prove_formula(&f, &cfg).is_proved();
        let dt = t.elapsed();
        if dt > worst { worst = dt; }
        let valid = decide_validity(&f).unwrap().is_valid();
        if valid { valid_count += 1; }
        if proved != valid {
            disagreements += 1;
            println!("DISAGREE #{} proved={} valid={}  {:?}", i, proved, valid, f);
        }
    }
    println!("n={} valid={} disagreements={} total={:?} worst_prove={:?}", n, valid_count, disagreements, t0.elapsed(), worst);
}
