use helix_oracle::oracle_loops;

#[test]
fn walker_reaches_its_cap_quickly() {
    let t = std::time::Instant::now();
    let loops = oracle_loops(24);
    let elapsed = t.elapsed();
    println!("length cap 24: {} loops in {elapsed:?}", loops.len());
    assert_eq!(loops.len(), 40);
    assert!(elapsed.as_secs() < 60, "walker too slow: {elapsed:?}");
}
