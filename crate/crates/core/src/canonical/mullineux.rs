use crate::error::{Error, Result};
use crate::partition_core::Partition;

/// A node `(row, column)`, both 0-indexed.
pub type Node = (usize, usize);

fn residue((a, b): Node, e: usize) -> usize {
    (b + e * (a + 1) - a) % e
}

fn addable(lam: &Partition) -> Vec<Node> {
    (0..=lam.len())
        .filter(|&a| a == 0 || lam.part(a) < lam.part(a - 1))
        .map(|a| (a, lam.part(a)))
        .collect()
}

fn removable(lam: &Partition) -> Vec<Node> {
    (0..lam.len())
        .filter(|&a| lam.part(a) > lam.part(a + 1))
        .map(|a| (a, lam.part(a) - 1))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Add,
    Rem,
}

/// The reduced `i`-signature read top to bottom: addable-then-removable pairs
/// cancel, leaving removable nodes followed by addable ones.
fn reduced_signature(lam: &Partition, i: usize, e: usize) -> Vec<(Node, Kind)> {
    let mut nodes: Vec<(Node, Kind)> = addable(lam)
        .into_iter()
        .map(|n| (n, Kind::Add))
        .chain(removable(lam).into_iter().map(|n| (n, Kind::Rem)))
        .filter(|(n, _)| residue(*n, e) == i)
        .collect();
    nodes.sort_by_key(|(n, _)| n.0);
    let mut stack: Vec<(Node, Kind)> = Vec::new();
    for item in nodes {
        match (item.1, stack.last()) {
            (Kind::Rem, Some((_, Kind::Add))) => {
                stack.pop();
            }
            _ => stack.push(item),
        }
    }
    stack
}

pub fn good_removable(lam: &Partition, i: usize, e: usize) -> Option<Node> {
    reduced_signature(lam, i, e).into_iter().filter(|(_, k)| *k == Kind::Rem).map(|(n, _)| n).next_back()
}

pub fn good_addable(lam: &Partition, i: usize, e: usize) -> Option<Node> {
    reduced_signature(lam, i, e).into_iter().find(|(_, k)| *k == Kind::Add).map(|(n, _)| n)
}

fn with_node(lam: &Partition, (a, _): Node, add: bool) -> Partition {
    let mut parts = lam.parts().to_vec();
    if add {
        if a == parts.len() {
            parts.push(1);
        } else {
            parts[a] += 1;
        }
    } else {
        parts[a] -= 1;
    }
    Partition::from_decreasing(parts)
}

/// Residues of the good nodes in the order they are added to build `μ` from `∅`.
pub fn good_node_word(mu: &Partition, e: usize) -> Result<Vec<usize>> {
    if !mu.is_e_regular(e) {
        return Err(Error::Domain(format!("{mu} is not {e}-regular")));
    }
    let mut lam = mu.clone();
    let mut word = Vec::with_capacity(mu.size());
    while !lam.is_empty() {
        let (i, node) = (0..e)
            .find_map(|i| good_removable(&lam, i, e).map(|n| (i, n)))
            .ok_or_else(|| Error::Internal(format!("{lam} has no good removable node")))?;
        lam = with_node(&lam, node, false);
        word.push(i);
    }
    word.reverse();
    Ok(word)
}

/// Build a partition from `∅` by adding the good node of each residue in turn.
pub fn from_good_node_word(word: &[usize], e: usize) -> Result<Partition> {
    let mut lam = Partition::empty();
    for &i in word {
        let node = good_addable(&lam, i, e)
            .ok_or_else(|| Error::Internal(format!("{lam} has no good addable {i}-node")))?;
        lam = with_node(&lam, node, true);
    }
    Ok(lam)
}

/// The Mullineux image `μ*`: rebuild from the good-node word with residues negated.
pub fn mullineux(mu: &Partition, e: usize) -> Result<Partition> {
    let word: Vec<usize> = good_node_word(mu, e)?.into_iter().map(|i| (e - i) % e).collect();
    from_good_node_word(&word, e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition_core::{e_regular_partitions, pt};

    #[test]
    fn examples() {
        assert_eq!(mullineux(&pt("2"), 2).unwrap(), pt("2"));
        assert_eq!(mullineux(&pt("2"), 3).unwrap(), pt("1,1"));
        assert_eq!(mullineux(&Partition::empty(), 4).unwrap(), Partition::empty());
        assert!(matches!(mullineux(&pt("1,1"), 2), Err(Error::Domain(_))));
    }

    #[test]
    fn good_nodes_e2() {
        // both removable nodes of (2,1) have residue 1; the lower one is good
        assert_eq!(good_removable(&pt("2,1"), 1, 2), Some((1, 0)));
        assert_eq!(good_removable(&pt("2,1"), 0, 2), None);
    }

    #[test]
    fn word_round_trip() {
        for e in 2..=4 {
            for n in 0..=9 {
                for mu in e_regular_partitions(n, e) {
                    let w = good_node_word(&mu, e).unwrap();
                    assert_eq!(from_good_node_word(&w, e).unwrap(), mu);
                }
            }
        }
    }

    #[test]
    fn large_e_is_conjugation() {
        for n in 0..=6 {
            for mu in crate::partition_core::partitions_of(n) {
                assert_eq!(mullineux(&mu, n + 1).unwrap(), mu.conjugate());
            }
        }
    }
}
