use powergraph::arith::{divisor_count, euler_phi, lcm};
use powergraph::power_graph::{
    comparable_with_all, directed_power_graph, dominating_vertices, mutual_power_classes,
    power_graph,
};
use powergraph::{Element, FiniteGroup};

fn corpus() -> Vec<FiniteGroup> {
    let mut out = Vec::new();
    for n in 1..=24 {
        out.push(FiniteGroup::cyclic(n).unwrap());
    }
    for n in 1..=10 {
        out.push(FiniteGroup::dihedral(n).unwrap());
    }
    for m in [8, 16, 32, 64] {
        out.push(FiniteGroup::generalized_quaternion(m).unwrap());
    }
    for n in 1..=4 {
        out.push(FiniteGroup::symmetric(n).unwrap());
    }
    let c = |n| FiniteGroup::cyclic(n).unwrap();
    out.push(FiniteGroup::direct_product(&c(2), &c(2)));
    out.push(FiniteGroup::direct_product(&c(2), &c(4)));
    out.push(FiniteGroup::direct_product(&c(3), &c(3)));
    out.push(FiniteGroup::direct_product(
        &c(9),
        &FiniteGroup::symmetric(3).unwrap(),
    ));
    out.push(FiniteGroup::direct_product(
        &FiniteGroup::generalized_quaternion(8).unwrap(),
        &c(3),
    ));
    out
}

#[test]
fn every_constructed_group_satisfies_the_axioms() {
    for g in corpus() {
        g.validate().unwrap_or_else(|e| panic!("{}: {e}", g.name()));
        assert!(g.order() <= 512);
        g.check_associative().unwrap();
    }
    FiniteGroup::symmetric(5).unwrap().validate().unwrap();
}

#[test]
fn element_orders_divide_group_order() {
    for g in corpus() {
        for x in g.elements() {
            assert_eq!(g.order() % g.element_order(x), 0, "{} {x:?}", g.name());
            assert_eq!(g.pow(x, g.element_order(x) as u64), g.identity());
            assert_eq!(g.cyclic_subgroup(x).len(), g.element_order(x));
        }
    }
}

#[test]
fn product_exponent_is_lcm() {
    let groups = corpus();
    let small: Vec<&FiniteGroup> = groups.iter().filter(|g| g.order() <= 12).collect();
    for g in &small {
        for h in &small {
            let gh = FiniteGroup::direct_product(g, h);
            assert_eq!(gh.exponent(), lcm(g.exponent(), h.exponent()));
        }
    }
}

#[test]
fn cyclic_subgroup_count_of_cn_is_divisor_count() {
    for n in 1..=100 {
        let g = FiniteGroup::cyclic(n).unwrap();
        assert_eq!(
            g.count_cyclic_subgroups() as u64,
            divisor_count(n),
            "n = {n}"
        );
    }
}

#[test]
fn cyclic_subgroup_count_matches_phi_weighting() {
    // each cyclic subgroup of order d has phi(d) generators
    for g in corpus() {
        let weighted: f64 = g
            .element_orders()
            .iter()
            .map(|&o| 1.0 / euler_phi(o as u64) as f64)
            .sum();
        assert_eq!(
            g.count_cyclic_subgroups(),
            weighted.round() as usize,
            "{}",
            g.name()
        );
    }
}

#[test]
fn inverses_and_power_agree() {
    for g in corpus() {
        for x in g.elements() {
            let inv = g.inverse(x);
            assert_eq!(g.mul(x, inv), g.identity());
            let o = g.element_order(x) as u64;
            assert_eq!(g.pow(x, o - 1 + o * 3), inv);
        }
    }
}

#[test]
fn power_graph_lies_inside_commuting_graph() {
    for g in corpus() {
        let p = power_graph(&g);
        for (u, v) in p.edges() {
            assert!(g.commutes(Element(u), Element(v)), "{}: {u} {v}", g.name());
        }
        let id = g.identity().index();
        assert_eq!(p.degree(id), g.order() - 1);
    }
}

#[test]
fn directed_power_graph_is_transitive_without_loops() {
    for g in corpus().into_iter().filter(|g| g.order() <= 64) {
        let d = directed_power_graph(&g);
        let id = g.identity().index();
        for x in 0..g.order() {
            assert!(!d.has_arc(x, x));
            if x != id {
                assert!(d.has_arc(x, id));
            }
            for y in d.out_neighbors(x).ones() {
                for z in d.out_neighbors(y).ones() {
                    if z != x {
                        assert!(d.has_arc(x, z), "{}: {x}->{y}->{z}", g.name());
                    }
                }
            }
        }
        assert_eq!(d.symmetrize(), power_graph(&g));
    }
}

#[test]
fn classes_partition_and_extension_is_consistent() {
    for g in corpus() {
        let poset = mutual_power_classes(&g);
        let p = power_graph(&g);
        let mut seen = vec![false; g.order()];
        for class in poset.classes() {
            assert!(p.is_clique(class));
            let o = g.element_order(Element(class[0])) as u64;
            assert_eq!(class.len() as u64, euler_phi(o));
            for &x in class {
                assert!(!seen[x]);
                seen[x] = true;
            }
        }
        assert!(seen.iter().all(|&s| s));
        assert_eq!(poset.len(), g.count_cyclic_subgroups());
        let ext = poset.linear_extension();
        let mut pos = vec![0; poset.len()];
        for (i, &c) in ext.iter().enumerate() {
            pos[c] = i;
        }
        for a in 0..poset.len() {
            for b in 0..poset.len() {
                if poset.is_below(a, b) {
                    assert!(pos[a] < pos[b]);
                }
            }
        }
    }
}

#[test]
fn dominating_vertices_are_exactly_the_comparable_elements() {
    for g in corpus() {
        let dom = dominating_vertices(&power_graph(&g));
        let direct: Vec<usize> = g
            .elements()
            .filter(|&x| comparable_with_all(&g, x))
            .map(|x| x.index())
            .collect();
        assert_eq!(dom, direct, "{}", g.name());
    }
}
