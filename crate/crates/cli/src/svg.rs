//! Static SVG drawings: lattice paths on a unit grid with dotted level
//! lines, and Foata-Strehl trees with right-child edges slanting right.
//! All coordinates are integers so the output is byte-reproducible.

use std::fmt::Write;

use catalan_spitzer::fstree::FsTree;
use catalan_spitzer::lattice::LatticePath;

const UNIT: i64 = 40;

pub fn path_svg(path: &LatticePath) -> String {
    let mut heights = vec![0i64];
    heights.extend(path.heights());
    let max_h = *heights.iter().max().expect("nonempty");
    let min_h = *heights.iter().min().expect("nonempty").min(&0);
    let len = path.len() as i64;
    let width = (len + 2) * UNIT;
    let height = (max_h - min_h + 2) * UNIT;
    let y = |h: i64| (max_h + 1 - h) * UNIT;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        svg,
        r#"<rect width="{width}" height="{height}" fill="white"/>"#
    );
    // Dotted level lines at every integer height the path touches.
    for level in min_h..=max_h {
        let _ = writeln!(
            svg,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="gray" stroke-dasharray="3,5" stroke-width="1"/>"#,
            UNIT / 2,
            y(level),
            width - UNIT / 2,
            y(level)
        );
    }
    // The x-axis, drawn solid.
    let _ = writeln!(
        svg,
        r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-width="1"/>"#,
        UNIT / 2,
        y(0),
        width - UNIT / 2,
        y(0)
    );
    let points: Vec<String> = heights
        .iter()
        .enumerate()
        .map(|(i, &h)| format!("{},{}", (i as i64 + 1) * UNIT, y(h)))
        .collect();
    let _ = writeln!(
        svg,
        r#"<polyline points="{}" fill="none" stroke="black" stroke-width="2"/>"#,
        points.join(" ")
    );
    for (i, &h) in heights.iter().enumerate() {
        let _ = writeln!(
            svg,
            r#"<circle cx="{}" cy="{}" r="4" fill="black"/>"#,
            (i as i64 + 1) * UNIT,
            y(h)
        );
    }
    let _ = writeln!(svg, "</svg>");
    svg
}

struct TreeLayout {
    // (label, in-order column, depth)
    nodes: Vec<(i64, i64, i64)>,
    // (parent index, child index)
    edges: Vec<(usize, usize)>,
    max_depth: i64,
}

fn layout(tree: &FsTree) -> TreeLayout {
    let mut layout = TreeLayout {
        nodes: Vec::new(),
        edges: Vec::new(),
        max_depth: 0,
    };
    let mut column = 0i64;
    if let Some(root) = tree.root() {
        place(tree, root, 0, &mut column, &mut layout);
    }
    layout
}

// Returns the index of the placed node inside layout.nodes.
fn place(tree: &FsTree, id: usize, depth: i64, column: &mut i64, out: &mut TreeLayout) -> usize {
    out.max_depth = out.max_depth.max(depth);
    let left = tree
        .left_child(id)
        .map(|l| place(tree, l, depth + 1, column, out));
    let me = out.nodes.len();
    out.nodes.push((tree.label_of(id), *column, depth));
    *column += 1;
    if let Some(l) = left {
        out.edges.push((me, l));
    }
    if let Some(r) = tree.right_child(id) {
        let r = place(tree, r, depth + 1, column, out);
        out.edges.push((me, r));
    }
    me
}

pub fn tree_svg(tree: &FsTree) -> String {
    let layout = layout(tree);
    let width = (layout.nodes.len() as i64 + 1) * UNIT;
    let height = (layout.max_depth + 2) * UNIT;
    let x = |col: i64| (col + 1) * UNIT;
    let y = |depth: i64| (depth + 1) * UNIT;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        svg,
        r#"<rect width="{width}" height="{height}" fill="white"/>"#
    );
    for &(parent, child) in &layout.edges {
        let (_, pc, pd) = layout.nodes[parent];
        let (_, cc, cd) = layout.nodes[child];
        let _ = writeln!(
            svg,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-width="1"/>"#,
            x(pc),
            y(pd),
            x(cc),
            y(cd)
        );
    }
    for &(label, col, depth) in &layout.nodes {
        let _ = writeln!(
            svg,
            r#"<circle cx="{}" cy="{}" r="13" fill="white" stroke="black" stroke-width="1"/>"#,
            x(col),
            y(depth)
        );
        let _ = writeln!(
            svg,
            r#"<text x="{}" y="{}" text-anchor="middle" dominant-baseline="central" font-size="14" font-family="sans-serif">{label}</text>"#,
            x(col),
            y(depth)
        );
    }
    let _ = writeln!(svg, "</svg>");
    svg
}
