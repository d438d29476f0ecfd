//! Stable loop identifiers of the form `"{length}-{position}"`.
//!
//! The enumeration order is deterministic (by length, then coordinate
//! vector), so the position of a loop among the loops of its length is a
//! stable identifier across runs and releases of the same schema.

use helix_core::curves::{enumerate_loops, NormalLoop};

/// All loops up to `max_length`, paired with their identifiers.
pub fn catalog(max_length: usize) -> Vec<(String, NormalLoop)> {
    let mut out = Vec::new();
    let mut prev_len = 0;
    let mut pos = 0;
    for lp in enumerate_loops(max_length) {
        if lp.length() != prev_len {
            prev_len = lp.length();
            pos = 0;
        }
        out.push((format!("{}-{}", lp.length(), pos), lp));
        pos += 1;
    }
    out
}

/// Looks up one loop by identifier, enumerating only up to its length.
pub fn find_loop(id: &str) -> Result<NormalLoop, String> {
    let (len, pos) = id
        .split_once('-')
        .and_then(|(l, p)| Some((l.parse::<usize>().ok()?, p.parse::<usize>().ok()?)))
        .ok_or_else(|| format!("malformed loop id {id:?}: expected \"<length>-<position>\""))?;
    catalog(len)
        .into_iter()
        .filter(|(_, lp)| lp.length() == len)
        .nth(pos)
        .map(|(_, lp)| lp)
        .ok_or_else(|| format!("no loop with id {id:?}: fewer than {} loops of length {len}", pos + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identifiers_are_dense_per_length() {
        let ids: Vec<String> = catalog(8).into_iter().map(|(id, _)| id).collect();
        assert_eq!(ids, ["3-0", "3-1", "3-2", "3-3", "4-0", "4-1", "4-2", "8-0", "8-1", "8-2"]);
    }

    #[test]
    fn lookup_round_trips() {
        for (id, lp) in catalog(12) {
            let found = find_loop(&id).unwrap();
            assert_eq!(found.coords().counts(), lp.coords().counts());
        }
    }

    #[test]
    fn lookup_rejects_bad_ids() {
        assert!(find_loop("monkey").is_err());
        assert!(find_loop("3-17").is_err());
        assert!(find_loop("5-0").is_err());
    }
}
