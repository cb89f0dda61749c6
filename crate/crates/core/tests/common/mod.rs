use snakefrac::ContinuedFraction;

/// Every continued fraction with `1 <= n <= max_len`, entries in
/// `1..=max_entry` and `a1 >= 2`.
pub fn grid(max_len: usize, max_entry: u64) -> Vec<ContinuedFraction> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<u64>> = (2..=max_entry).map(|a| vec![a]).collect();
    for _ in 0..max_len {
        out.extend(layer.iter().map(|e| ContinuedFraction::new(e.clone()).unwrap()));
        layer = layer
            .iter()
            .flat_map(|p| (1..=max_entry).map(move |a| [p.as_slice(), &[a]].concat()))
            .collect();
    }
    out
}
