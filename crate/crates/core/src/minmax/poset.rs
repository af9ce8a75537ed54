use serde::Serialize;

use crate::clique_tree::{build_clique_tree, CliqueTree};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};

/// Distinct minimal separators ordered by inclusion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeparatorPoset {
    separators: Vec<VertexSet>,
    multiplicity: Vec<usize>,
    /// Covering pairs `(i, j)`: `separators[i] ⊂ separators[j]` with
    /// nothing strictly between.
    hasse: Vec<(usize, usize)>,
    min_max: Vec<bool>,
    min_min: Vec<bool>,
}

impl SeparatorPoset {
    /// Poset over the labels of `t`, sorted by size and then
    /// lexicographically.
    pub fn from_tree(t: &CliqueTree) -> Self {
        let multiset = t.separator_multiset();
        let mut items: Vec<(VertexSet, usize)> = multiset.into_iter().collect();
        items.sort_by(|x, y| x.0.len().cmp(&y.0.len()).then_with(|| x.0.cmp(&y.0)));
        let (separators, multiplicity): (Vec<VertexSet>, Vec<usize>) = items.into_iter().unzip();
        let s = separators.len();

        // supersets[i]: indices j with separators[i] ⊂ separators[j]
        let universe = separators.iter().flat_map(|x| x.iter()).max().map_or(0, |v| v + 1);
        let mut holders: Vec<Vec<usize>> = vec![Vec::new(); universe];
        for (j, sep) in separators.iter().enumerate() {
            for x in sep.iter() {
                holders[x].push(j);
            }
        }
        let mut supersets: Vec<Vec<usize>> = vec![Vec::new(); s];
        for (i, sep) in separators.iter().enumerate() {
            if sep.is_empty() {
                supersets[i] = (0..s).filter(|&j| j != i).collect();
                continue;
            }
            let pivot = sep.iter().min_by_key(|&x| holders[x].len()).expect("non-empty");
            supersets[i] = holders[pivot]
                .iter()
                .copied()
                .filter(|&j| separators[j].len() > sep.len() && sep.is_subset(&separators[j]))
                .collect();
        }
        let mut min_max = vec![true; s];
        let mut min_min = vec![true; s];
        let mut hasse = Vec::new();
        for i in 0..s {
            if !supersets[i].is_empty() {
                min_max[i] = false;
            }
            for &j in &supersets[i] {
                min_min[j] = false;
                let covered = supersets[i]
                    .iter()
                    .any(|&k| k != j && separators[k].is_proper_subset(&separators[j]));
                if !covered {
                    hasse.push((i, j));
                }
            }
        }
        hasse.sort_unstable();
        SeparatorPoset {
            separators,
            multiplicity,
            hasse,
            min_max,
            min_min,
        }
    }

    pub fn separators(&self) -> &[VertexSet] {
        &self.separators
    }

    pub fn multiplicity(&self, i: usize) -> usize {
        self.multiplicity[i]
    }

    pub fn hasse(&self) -> &[(usize, usize)] {
        &self.hasse
    }

    pub fn len(&self) -> usize {
        self.separators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.separators.is_empty()
    }

    pub fn index_of(&self, s: &VertexSet) -> Option<usize> {
        self.separators
            .binary_search_by(|x| x.len().cmp(&s.len()).then_with(|| x.cmp(s)))
            .ok()
    }

    pub fn is_min_max(&self, i: usize) -> bool {
        self.min_max[i]
    }

    pub fn is_min_min(&self, i: usize) -> bool {
        self.min_min[i]
    }

    /// True iff `s` is a separator of the poset with no proper superset.
    pub fn contains_min_max(&self, s: &VertexSet) -> bool {
        self.index_of(s).is_some_and(|i| self.min_max[i])
    }

    pub fn contains_min_min(&self, s: &VertexSet) -> bool {
        self.index_of(s).is_some_and(|i| self.min_min[i])
    }

    pub fn min_max_separators(&self) -> impl Iterator<Item = &VertexSet> {
        self.separators
            .iter()
            .zip(&self.min_max)
            .filter(|(_, &f)| f)
            .map(|(s, _)| s)
    }

    pub fn min_min_separators(&self) -> impl Iterator<Item = &VertexSet> {
        self.separators
            .iter()
            .zip(&self.min_min)
            .filter(|(_, &f)| f)
            .map(|(s, _)| s)
    }
}

/// Inclusion poset of the minimal separators of a connected chordal graph.
pub fn separator_poset(g: &Graph) -> Result<SeparatorPoset> {
    Ok(SeparatorPoset::from_tree(&build_clique_tree(g)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_has_empty_poset() {
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(separator_poset(&k4).unwrap().is_empty());
    }

    #[test]
    fn g1_separators_are_incomparable() {
        let g1 = Graph::from_edges(
            6,
            [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (4, 5)],
        )
        .unwrap();
        let p = separator_poset(&g1).unwrap();
        assert_eq!(p.separators(), &[VertexSet::from([4]), VertexSet::from([2, 3])]);
        assert!(p.hasse().is_empty());
        for i in 0..2 {
            assert!(p.is_min_max(i) && p.is_min_min(i));
        }
    }

    #[test]
    fn nested_separators() {
        // K4{a,b,c,x} ∪ triangle{a,b,y} ∪ edge{a,z}; a,b,c,x,y,z = 0..5
        let g = Graph::from_edges(
            6,
            [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 4), (0, 5)],
        )
        .unwrap();
        let p = separator_poset(&g).unwrap();
        let small = p.index_of(&VertexSet::from([0])).unwrap();
        let big = p.index_of(&VertexSet::from([0, 1])).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.hasse(), &[(small, big)]);
        assert!(p.is_min_max(big) && !p.is_min_max(small));
        assert!(p.is_min_min(small) && !p.is_min_min(big));
    }
}
