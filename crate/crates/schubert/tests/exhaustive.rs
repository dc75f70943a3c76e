//! Exhaustive small-scale verification of the slide-level invariants: every
//! rectification order agrees, shuffling is an involution, the single-square
//! slide round-trips, reflection is an involution, and strip decompositions
//! rectify to the decomposition of the rectification.

use schubert_curves::enumerate::{ballot_fillings, enumerate_box_last, partitions_by_size};
use schubert_curves::jdt::{rectify, rectify_with, shuffle};
use schubert_curves::local::s_decomposition;
use schubert_curves::naive::ssyt_fillings_forward;
use schubert_curves::skew::{SkewShape, SkewTableau};
use schubert_curves::sweep::{problems_in, rectangles_up_to};
use schubert_curves::{Partition, Rectangle};

/// All skew shapes inside the rectangle with at most `max_cells` cells.
fn shapes_in(rect: Rectangle, max_cells: usize) -> Vec<SkewShape> {
    let groups = partitions_by_size(rect);
    let all: Vec<Partition> = groups.into_iter().flatten().collect();
    let mut out = Vec::new();
    for outer in &all {
        for inner in &all {
            if outer.contains(inner) && outer.size() - inner.size() <= max_cells {
                out.push(SkewShape::new(outer.clone(), inner.clone()).unwrap());
            }
        }
    }
    out
}

/// All ballot fillings of the shape over every partition content.
fn ballot_tableaux_of(shape: &SkewShape) -> Vec<SkewTableau> {
    let size = shape.size();
    let mut out = Vec::new();
    for content in partitions_by_size(Rectangle::new(size.max(1), size.max(1)).unwrap())
        .into_iter()
        .nth(size)
        .unwrap_or_default()
    {
        out.extend(ballot_fillings(shape, &content));
    }
    out
}

/// Run every sequence of inner co-corner choices.
fn all_rectification_orders(t: &SkewTableau) -> Vec<SkewTableau> {
    fn go(t: &SkewTableau, prefix: &mut Vec<usize>, out: &mut Vec<SkewTableau>) {
        // Replay the prefix, then branch on the next choice.
        let mut depth = 0usize;
        let (result, _) = rectify_with(t, |holes| {
            let pick = if depth < prefix.len() {
                prefix[depth]
            } else {
                0
            };
            depth += 1;
            pick.min(holes.len() - 1)
        });
        if depth <= prefix.len() {
            out.push(result);
            return;
        }
        // Count the branching at position prefix.len().
        let mut fanout = 0usize;
        let mut probe = 0usize;
        rectify_with(t, |holes| {
            if probe == prefix.len() {
                fanout = holes.len();
            }
            let pick = if probe < prefix.len() {
                prefix[probe]
            } else {
                0
            };
            probe += 1;
            pick.min(holes.len() - 1)
        });
        for choice in 0..fanout {
            prefix.push(choice);
            go(t, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(t, &mut Vec::new(), &mut out);
    out
}

#[test]
fn rectification_is_order_independent() {
    let mut checked = 0usize;
    for shape in shapes_in(Rectangle::new(3, 3).unwrap(), 6) {
        if shape.size() == 0 {
            continue;
        }
        for t in ballot_tableaux_of(&shape) {
            let canonical = rectify(&t);
            for r in all_rectification_orders(&t) {
                assert_eq!(r, canonical, "slide orders disagree on\n{t}");
            }
            // Ballot fillings rectify to the unique straight ballot filling.
            let content = Partition::new(t.content()).unwrap();
            assert_eq!(canonical, SkewTableau::highest_weight(&content));
            checked += 1;
        }
    }
    assert!(checked > 100, "only {checked} tableaux checked");
}

/// All semistandard fillings with entries at most `max`.
fn all_ssyt(shape: &SkewShape, max: usize) -> Vec<SkewTableau> {
    let size = shape.size();
    let mut out = Vec::new();
    let mut content = vec![0usize; max];
    fn go(
        shape: &SkewShape,
        content: &mut Vec<usize>,
        v: usize,
        left: usize,
        out: &mut Vec<SkewTableau>,
    ) {
        if v == content.len() {
            if left == 0 {
                out.extend(ssyt_fillings_forward(shape, content));
            }
            return;
        }
        for take in 0..=left {
            content[v] = take;
            go(shape, content, v + 1, left - take, out);
        }
        content[v] = 0;
    }
    go(shape, &mut content, 0, size, &mut out);
    out
}

#[test]
fn outward_then_inward_slides_are_inverse() {
    for shape in shapes_in(Rectangle::new(3, 3).unwrap(), 6) {
        if shape.size() == 0 {
            continue;
        }
        for t in ballot_tableaux_of(&shape) {
            for hole in t.shape().outer_cocorners() {
                let Ok((slid, rec)) = schubert_curves::jdt::outward_slide(&t, hole) else {
                    continue;
                };
                let (back, rec2) = schubert_curves::jdt::inward_slide(&slid, rec.end).unwrap();
                assert_eq!(back, t, "outward then inward from {hole} on\n{t}");
                assert_eq!(rec2.end, rec.start);
            }
            for hole in t.shape().inner_cocorners() {
                let Ok((slid, rec)) = schubert_curves::jdt::inward_slide(&t, hole) else {
                    continue;
                };
                let (back, _) = schubert_curves::jdt::outward_slide(&slid, rec.end).unwrap();
                assert_eq!(back, t, "inward then outward from {hole} on\n{t}");
            }
        }
    }
}

#[test]
fn one_decomposition_reflects_to_horizontal_strips() {
    // The vertical strips of the 1-decomposition become, cell for cell, the
    // horizontal strips of the reflected tableau.
    use schubert_curves::enumerate::enumerate_box_first;
    use std::collections::BTreeSet;
    for rect in rectangles_up_to(6) {
        for problem in problems_in(rect) {
            for pt in enumerate_box_first(&problem).unwrap() {
                let numeric = pt.numeric_part().unwrap();
                if numeric.size() == 0 {
                    continue;
                }
                let dec = s_decomposition(&numeric, 1).unwrap();
                let top = dec.t;
                let reflected = pt.rotate_transpose(rect).unwrap();
                let r_numeric = reflected.numeric_part().unwrap();
                for j in 1..=top {
                    let strip_j: BTreeSet<_> = r_numeric
                        .entries_reading()
                        .filter(|&(_, v)| v == j)
                        .map(|(c, _)| c)
                        .collect();
                    let expected: BTreeSet<_> = dec.verticals[top - j]
                        .iter()
                        .map(|&c| rect.antidiagonal(c))
                        .collect();
                    assert_eq!(strip_j, expected, "strip {j} of the reflection");
                }
            }
        }
    }
}

#[test]
fn shuffling_is_an_involution() {
    let rect = Rectangle::new(3, 3).unwrap();
    let mut checked = 0usize;
    for s_shape in shapes_in(rect, 4) {
        if s_shape.size() == 0 {
            continue;
        }
        for t_shape in shapes_in(rect, 4) {
            if t_shape.inner() != s_shape.outer()
                || t_shape.size() == 0
                || s_shape.size() + t_shape.size() > 7
            {
                continue;
            }
            for s in all_ssyt(&s_shape, s_shape.size().min(3)) {
                for t in all_ssyt(&t_shape, t_shape.size().min(3)) {
                    let (t2, s2) = shuffle(&s, &t).unwrap();
                    let (s3, t3) = shuffle(&t2, &s2).unwrap();
                    assert_eq!(s3, s, "shuffle twice must restore s");
                    assert_eq!(t3, t, "shuffle twice must restore t");
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 500, "only {checked} pairs checked");
}

#[test]
fn single_square_slide_roundtrips() {
    // Over every small problem, sliding the square in and back out is the
    // identity on the whole last-position set.
    let mut checked = 0usize;
    for rect in rectangles_up_to(6) {
        for problem in problems_in(rect) {
            for pt in enumerate_box_last(&problem).unwrap() {
                let (first, _) = pt.sh().unwrap();
                let (back, _) = first.sh_inverse().unwrap();
                assert_eq!(back, pt);
                checked += 1;
            }
        }
    }
    assert!(checked > 500, "only {checked} tableaux checked");
}

#[test]
fn reflection_is_an_involution_and_reflects_shapes() {
    for rect in rectangles_up_to(6) {
        for problem in problems_in(rect) {
            for pt in enumerate_box_last(&problem).unwrap() {
                let r = pt.rotate_transpose(rect).unwrap();
                // Shapes land on the antidiagonal reflection.
                assert_eq!(
                    r.shape(),
                    &pt.shape().antidiagonal(rect).unwrap(),
                    "shape must reflect"
                );
                let back = r.rotate_transpose(rect.transpose()).unwrap();
                assert_eq!(back, pt);
            }
        }
    }
}

#[test]
fn class_reflections_compose() {
    // Rotating then transposing the class equals the direct strip-wise
    // reflection, and the reverse algorithm on the rotated class switches
    // phases at the same step as the forward algorithm.
    use schubert_curves::enumerate::enumerate_box_first;
    use schubert_curves::local::{local_esh, local_esh_reverse};
    for rect in rectangles_up_to(6) {
        for problem in problems_in(rect) {
            for pt in enumerate_box_first(&problem).unwrap() {
                let via_classes = pt.rotate_class(rect).unwrap().transpose_class().unwrap();
                let direct = pt.rotate_transpose(rect).unwrap();
                assert_eq!(via_classes, direct, "class reflections disagree on\n{pt}");

                let (_, forward) = local_esh(&pt).unwrap();
                let rotated = pt.rotate_class(rect).unwrap();
                let (_, backward) = local_esh_reverse(&rotated).unwrap();
                assert_eq!(
                    backward.transition_step, forward.transition_step,
                    "rotated class must reverse at the same step on\n{pt}"
                );
            }
        }
    }
}

#[test]
fn genomic_enumeration_matches_brute_force_up_to_4x4() {
    use schubert_curves::enumerate::enumerate_genomic;
    use schubert_curves::naive::genomic_brute;
    for rows in 1..=4 {
        for cols in 1..=4 {
            for problem in problems_in(Rectangle::new(rows, cols).unwrap()) {
                assert_eq!(
                    enumerate_genomic(&problem).unwrap(),
                    genomic_brute(&problem).unwrap(),
                    "genomic enumerations disagree on {problem}"
                );
            }
        }
    }
}

#[test]
fn two_row_content_orbit_bound_in_4x5() {
    // For two-row contents the Phase 1 bound holds on every orbit; check it
    // over the full 4 x 5 rectangle, beyond the shared sweep's reach.
    use schubert_curves::monodromy::orbit_decomposition;
    let rect = Rectangle::new(4, 5).unwrap();
    let mut orbits_checked = 0usize;
    for problem in problems_in(rect) {
        if problem.beta.len() != 2 {
            continue;
        }
        let report = orbit_decomposition(&problem).unwrap();
        for orbit in &report.orbits {
            assert!(
                orbit.k1.len() + 1 >= orbit.size(),
                "orbit of size {} with only {} phase-1 genomic tableaux in {problem}",
                orbit.size(),
                orbit.k1.len()
            );
            orbits_checked += 1;
        }
    }
    assert!(orbits_checked > 100, "only {orbits_checked} orbits checked");
}

#[test]
fn strip_decompositions_rectify_prefixwise() {
    // Every prefix of the strip decomposition rectifies to the matching
    // prefix of the rectified tableau's decomposition.
    for shape in shapes_in(Rectangle::new(3, 3).unwrap(), 6) {
        if shape.size() == 0 {
            continue;
        }
        for t in ballot_tableaux_of(&shape) {
            let beta = Partition::new(t.content()).unwrap();
            let rect_t = rectify(&t);
            for s in 1..=beta.len() + 1 {
                let dec = s_decomposition(&t, s).unwrap();
                let dec_rect = s_decomposition(&rect_t, s).unwrap();
                let shapes = dec.strip_shapes(t.shape().inner()).unwrap();
                let rect_shapes = dec_rect.strip_shapes(rect_t.shape().inner()).unwrap();
                assert_eq!(shapes.len(), rect_shapes.len());
                for k in 1..shapes.len() {
                    let cells: Vec<_> = t
                        .entries_reading()
                        .filter(|(c, _)| {
                            dec.horizontals
                                .iter()
                                .chain(dec.verticals.iter())
                                .take(k)
                                .any(|strip| strip.contains(c))
                        })
                        .collect();
                    let prefix_shape =
                        SkewShape::new(shapes[k].clone(), t.shape().inner().clone()).unwrap();
                    let prefix = SkewTableau::from_cells(prefix_shape, cells).unwrap();
                    assert_eq!(
                        rectify(&prefix).shape().outer(),
                        &rect_shapes[k],
                        "prefix {k} of the {s}-decomposition of\n{t}"
                    );
                }
            }
        }
    }
}
