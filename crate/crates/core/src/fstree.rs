//! Foata-Strehl trees: plane 0-1-2 trees built from distinct-letter words by
//! recursive minimum splitting.
//!
//! The in-order traversal (left subtree, root, right subtree) inverts the
//! construction, so words and labeled trees are in bijection. The *level* of
//! a vertex is the number of right steps on its root path; the path itself is
//! encoded by an rl-word over {r, l}. A labeled tree is *levelwise numbered*
//! when reading its vertices by (level, rl-word) order — with r before l and
//! every word before its l-extensions — yields the labels 1, 2, ..., n.
//! Every unlabeled shape admits exactly one such labeling.

use std::collections::BTreeMap;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Largest supported tree; rl-words are packed into 64-bit keys.
pub const MAX_VERTICES: usize = 64;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum TreeError {
    #[error("word contains the letter {letter} twice")]
    RepeatedLetter { letter: i64 },
    #[error("no vertex has label {label}")]
    UnknownLabel { label: i64 },
    #[error("labels must be exactly 1..={expected}")]
    LabelsNotOneToN { expected: usize },
    #[error("trees with more than {MAX_VERTICES} vertices are not supported")]
    TooLarge,
}

/// One letter of an rl-word; `R` sorts before `L`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Dir {
    R,
    L,
}

/// Root-to-vertex path encoding: `R` per right-child step, `L` per
/// left-child step. The derived `Ord` (with prefixes first) is exactly the
/// within-level order used by levelwise numbering.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct RlWord(pub Vec<Dir>);

impl RlWord {
    /// Number of `R` letters, i.e. the level of the vertex it encodes.
    pub fn level(&self) -> usize {
        self.0.iter().filter(|d| **d == Dir::R).count()
    }
}

impl std::fmt::Display for RlWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for d in &self.0 {
            f.write_str(match d {
                Dir::R => "r",
                Dir::L => "l",
            })?;
        }
        Ok(())
    }
}

/// An unlabeled plane 0-1-2 tree (one vertex plus optional subtrees).
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TreeShape {
    pub left: Option<Box<TreeShape>>,
    pub right: Option<Box<TreeShape>>,
}

impl TreeShape {
    pub fn leaf() -> TreeShape {
        TreeShape {
            left: None,
            right: None,
        }
    }

    pub fn vertex_count(&self) -> usize {
        1 + self.left.as_ref().map_or(0, |t| t.vertex_count())
            + self.right.as_ref().map_or(0, |t| t.vertex_count())
    }
}

/// Every plane 0-1-2 shape with exactly `n` vertices, in a deterministic
/// order (left subtree size ascending, then recursively).
pub fn all_shapes(n: usize) -> Vec<TreeShape> {
    if n == 0 {
        return Vec::new();
    }
    let mut shapes = Vec::new();
    for left_size in 0..n {
        let right_size = n - 1 - left_size;
        let lefts: Vec<Option<Box<TreeShape>>> = if left_size == 0 {
            vec![None]
        } else {
            all_shapes(left_size)
                .into_iter()
                .map(|s| Some(Box::new(s)))
                .collect()
        };
        let rights: Vec<Option<Box<TreeShape>>> = if right_size == 0 {
            vec![None]
        } else {
            all_shapes(right_size)
                .into_iter()
                .map(|s| Some(Box::new(s)))
                .collect()
        };
        for l in &lefts {
            for r in &rights {
                shapes.push(TreeShape {
                    left: l.clone(),
                    right: r.clone(),
                });
            }
        }
    }
    shapes
}

/// A labeled Foata-Strehl tree, stored as an arena.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FsTree {
    labels: Vec<i64>,
    left: Vec<Option<usize>>,
    right: Vec<Option<usize>>,
    root: Option<usize>,
}

impl FsTree {
    pub fn empty() -> FsTree {
        FsTree {
            labels: Vec::new(),
            left: Vec::new(),
            right: Vec::new(),
            root: None,
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.root.is_none()
    }

    /// Build the tree of a distinct-letter word: the root is the minimum,
    /// the left subtree comes from the prefix before it and the right
    /// subtree from the suffix after it.
    pub fn build(word: &[i64]) -> Result<FsTree, TreeError> {
        if word.len() > MAX_VERTICES {
            return Err(TreeError::TooLarge);
        }
        let mut seen = std::collections::BTreeSet::new();
        for &w in word {
            if !seen.insert(w) {
                return Err(TreeError::RepeatedLetter { letter: w });
            }
        }
        let mut tree = FsTree::empty();
        tree.labels.reserve(word.len());
        tree.left.reserve(word.len());
        tree.right.reserve(word.len());
        tree.root = tree.build_range(word, 0, word.len());
        Ok(tree)
    }

    fn build_range(&mut self, word: &[i64], lo: usize, hi: usize) -> Option<usize> {
        if lo >= hi {
            return None;
        }
        let mut min_at = lo;
        for i in lo + 1..hi {
            if word[i] < word[min_at] {
                min_at = i;
            }
        }
        let id = self.labels.len();
        self.labels.push(word[min_at]);
        self.left.push(None);
        self.right.push(None);
        let left = self.build_range(word, lo, min_at);
        let right = self.build_range(word, min_at + 1, hi);
        self.left[id] = left;
        self.right[id] = right;
        Some(id)
    }

    /// In-order traversal; inverse of [`FsTree::build`].
    pub fn unbuild(&self) -> Vec<i64> {
        let mut word = Vec::with_capacity(self.len());
        // Explicit stack: (node, children already emitted?).
        let mut stack = Vec::new();
        let mut cursor = self.root;
        while cursor.is_some() || !stack.is_empty() {
            while let Some(id) = cursor {
                stack.push(id);
                cursor = self.left[id];
            }
            let id = stack.pop().expect("stack nonempty");
            word.push(self.labels[id]);
            cursor = self.right[id];
        }
        word
    }

    pub fn label_of(&self, id: usize) -> i64 {
        self.labels[id]
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn left_child(&self, id: usize) -> Option<usize> {
        self.left[id]
    }

    pub fn right_child(&self, id: usize) -> Option<usize> {
        self.right[id]
    }

    fn node_of_label(&self, label: i64) -> Result<usize, TreeError> {
        self.labels
            .iter()
            .position(|&l| l == label)
            .ok_or(TreeError::UnknownLabel { label })
    }

    /// Map each label to its level (number of right steps from the root).
    pub fn levels(&self) -> BTreeMap<i64, usize> {
        let mut map = BTreeMap::new();
        let mut stack: Vec<(usize, usize)> = self.root.map(|r| (r, 0)).into_iter().collect();
        while let Some((id, level)) = stack.pop() {
            map.insert(self.labels[id], level);
            if let Some(l) = self.left[id] {
                stack.push((l, level));
            }
            if let Some(r) = self.right[id] {
                stack.push((r, level + 1));
            }
        }
        map
    }

    /// The rl-word of the vertex carrying `label`.
    pub fn rl_word(&self, label: i64) -> Result<RlWord, TreeError> {
        let target = self.node_of_label(label)?;
        let mut path = Vec::new();
        let root = self.root.expect("label found, tree nonempty");
        let found = self.find_path(root, target, &mut path);
        debug_assert!(found);
        Ok(RlWord(path))
    }

    fn find_path(&self, id: usize, target: usize, path: &mut Vec<Dir>) -> bool {
        if id == target {
            return true;
        }
        if let Some(l) = self.left[id] {
            path.push(Dir::L);
            if self.find_path(l, target, path) {
                return true;
            }
            path.pop();
        }
        if let Some(r) = self.right[id] {
            path.push(Dir::R);
            if self.find_path(r, target, path) {
                return true;
            }
            path.pop();
        }
        false
    }

    /// Per-vertex (node id, level, packed rl-key). The rl-word is packed
    /// left-aligned into a u64 with r = 0 and l = 1, so within one level the
    /// key compares exactly like the rl-word order (r before l, prefixes
    /// before their l-extensions); two same-level words can only share a
    /// padded key by being equal.
    fn level_keys(&self) -> Vec<(usize, usize, u64)> {
        assert!(self.len() <= MAX_VERTICES, "rl-keys need depth <= 64");
        let mut out = Vec::with_capacity(self.len());
        let mut stack: Vec<(usize, usize, u64, u32)> =
            self.root.map(|r| (r, 0, 0u64, 0u32)).into_iter().collect();
        while let Some((id, level, bits, depth)) = stack.pop() {
            let key = if depth == 0 { 0 } else { bits << (64 - depth) };
            out.push((id, level, key));
            if let Some(l) = self.left[id] {
                stack.push((l, level, (bits << 1) | 1, depth + 1));
            }
            if let Some(r) = self.right[id] {
                stack.push((r, level + 1, bits << 1, depth + 1));
            }
        }
        out
    }

    /// True iff the labels are the unique levelwise numbering of the shape:
    /// sorting the vertices by (level, rl-word) yields labels 1..n in order.
    pub fn is_levelwise_numbered(&self) -> Result<bool, TreeError> {
        let n = self.len();
        let mut key_by_label: Vec<Option<(usize, u64)>> = vec![None; n];
        for (id, level, key) in self.level_keys() {
            let label = self.labels[id];
            if label < 1 || label > n as i64 {
                return Err(TreeError::LabelsNotOneToN { expected: n });
            }
            let slot = &mut key_by_label[label as usize - 1];
            if slot.is_some() {
                return Err(TreeError::LabelsNotOneToN { expected: n });
            }
            *slot = Some((level, key));
        }
        let keys: Vec<(usize, u64)> = key_by_label
            .into_iter()
            .map(|k| k.expect("n distinct labels in 1..=n fill every slot"))
            .collect();
        Ok(keys.windows(2).all(|w| w[0] < w[1]))
    }

    /// Label a shape with its unique levelwise numbering.
    pub fn levelwise_numbering(shape: &TreeShape) -> FsTree {
        assert!(
            shape.vertex_count() <= MAX_VERTICES,
            "shapes with more than {MAX_VERTICES} vertices are not supported"
        );
        let mut tree = FsTree::empty();
        let root = tree.copy_shape(shape);
        tree.root = Some(root);
        let mut order = tree.level_keys();
        order.sort_by_key(|&(_, level, key)| (level, key));
        for (rank, (id, _, _)) in order.into_iter().enumerate() {
            tree.labels[id] = rank as i64 + 1;
        }
        tree
    }

    fn copy_shape(&mut self, shape: &TreeShape) -> usize {
        let id = self.labels.len();
        self.labels.push(0);
        self.left.push(None);
        self.right.push(None);
        let left = shape.left.as_ref().map(|s| self.copy_shape(s));
        let right = shape.right.as_ref().map(|s| self.copy_shape(s));
        self.left[id] = left;
        self.right[id] = right;
        id
    }

    /// True iff every maximal chain of parent-to-right-child edges has a
    /// vertex count divisible by k-1. Trivially true for k = 2.
    pub fn k_condition(&self, k: u32) -> bool {
        assert!(k >= 2, "k must be at least 2");
        if k == 2 {
            return true;
        }
        let modulus = (k - 1) as usize;
        let mut is_right_child = vec![false; self.len()];
        for id in 0..self.len() {
            if let Some(r) = self.right[id] {
                is_right_child[r] = true;
            }
        }
        for (start, &from_right) in is_right_child.iter().enumerate() {
            if from_right {
                continue;
            }
            let mut count = 0;
            let mut cursor = Some(start);
            while let Some(id) = cursor {
                count += 1;
                cursor = self.right[id];
            }
            if count % modulus != 0 {
                return false;
            }
        }
        true
    }

    /// The underlying unlabeled shape, or `None` for the empty tree.
    pub fn shape(&self) -> Option<TreeShape> {
        self.root.map(|r| self.shape_of(r))
    }

    fn shape_of(&self, id: usize) -> TreeShape {
        TreeShape {
            left: self.left[id].map(|l| Box::new(self.shape_of(l))),
            right: self.right[id].map(|r| Box::new(self.shape_of(r))),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct JsonNode {
    label: i64,
    left: Option<Box<JsonNode>>,
    right: Option<Box<JsonNode>>,
}

impl FsTree {
    fn to_json_node(&self, id: usize) -> JsonNode {
        JsonNode {
            label: self.labels[id],
            left: self.left[id].map(|l| Box::new(self.to_json_node(l))),
            right: self.right[id].map(|r| Box::new(self.to_json_node(r))),
        }
    }

    fn insert_json_node(&mut self, node: &JsonNode) -> usize {
        let id = self.labels.len();
        self.labels.push(node.label);
        self.left.push(None);
        self.right.push(None);
        let left = node.left.as_ref().map(|n| self.insert_json_node(n));
        let right = node.right.as_ref().map(|n| self.insert_json_node(n));
        self.left[id] = left;
        self.right[id] = right;
        id
    }
}

impl Serialize for FsTree {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.root
            .map(|r| self.to_json_node(r))
            .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FsTree {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let node = Option::<JsonNode>::deserialize(deserializer)?;
        let mut tree = FsTree::empty();
        if let Some(node) = node {
            let root = tree.insert_json_node(&node);
            tree.root = Some(root);
        }
        if tree.len() > MAX_VERTICES {
            return Err(D::Error::custom(TreeError::TooLarge));
        }
        let mut seen = std::collections::BTreeSet::new();
        for &l in &tree.labels {
            if !seen.insert(l) {
                return Err(D::Error::custom(TreeError::RepeatedLetter { letter: l }));
            }
        }
        Ok(tree)
    }
}
