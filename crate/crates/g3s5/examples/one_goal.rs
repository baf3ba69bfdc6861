use g3s5::kernel::Variant;
use g3s5::search::{prove, variant_goals, SearchConfig};
fn main() {
    let depth: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(14);
    let which: usize = std::env::args().nth(2).and_then(|s| s.parse().ok()).unwrap_or(3);
    let mut cfg = SearchConfig::with_variant(Variant::Variant4);
    cfg.depth_bound = depth;
    let (name, goal) = variant_goals().into_iter().nth(which).unwrap();
    let t = std::time::Instant::now();
    let res = prove(&goal, &cfg);
    println!("v4{} depth={} proved={} in {:?}", name, depth, res.is_proved(), t.elapsed());
}
