use super::ThreeGraph;
use crate::coloring::TripleColoring;
use crate::{Error, Result, Vertex};

pub const DEFAULT_EMBED_GUARD: usize = 15;

/// Finds an injective map `V(h) -> 0..N` sending every edge of `h` to a red
/// triple, by backtracking in an order where each vertex closes as many
/// edges as possible against already placed ones.
pub fn contains_red_copy(
    chi: &TripleColoring,
    h: &ThreeGraph,
    max_vertices: usize,
) -> Result<Option<Vec<Vertex>>> {
    let k = h.num_vertices() as usize;
    if k > max_vertices {
        return Err(Error::TooLarge {
            size: k,
            limit: max_vertices,
        });
    }
    let n = chi.num_vertices() as usize;
    if k > n {
        return Err(Error::invalid(format!(
            "pattern has {k} vertices but the coloring only {n}"
        )));
    }
    let order = embedding_order(h);
    let mut pos = vec![0usize; k];
    for (i, &v) in order.iter().enumerate() {
        pos[v as usize] = i;
    }
    // closing[i]: the other two pattern vertices of each edge whose last
    // vertex in `order` is order[i]
    let mut closing: Vec<Vec<(Vertex, Vertex)>> = vec![Vec::new(); k];
    for e in h.edges() {
        let mut by_pos = *e;
        by_pos.sort_by_key(|&v| pos[v as usize]);
        closing[pos[by_pos[2] as usize]].push((by_pos[0], by_pos[1]));
    }
    let mut image: Vec<Option<Vertex>> = vec![None; k];
    let mut used = vec![false; n];
    if search(chi, &order, &closing, 0, &mut image, &mut used) {
        Ok(Some(image.into_iter().map(|x| x.unwrap()).collect()))
    } else {
        Ok(None)
    }
}

fn embedding_order(h: &ThreeGraph) -> Vec<Vertex> {
    let k = h.num_vertices();
    let mut placed = vec![false; k as usize];
    let mut order = Vec::with_capacity(k as usize);
    while order.len() < k as usize {
        let next = (0..k)
            .filter(|&v| !placed[v as usize])
            .max_by_key(|&v| {
                let mut closes = 0;
                let mut touches = 0;
                for e in h.edges().iter().filter(|e| e.contains(&v)) {
                    let others = e.iter().filter(|&&x| x != v && placed[x as usize]).count();
                    closes += (others == 2) as usize;
                    touches += (others >= 1) as usize;
                }
                (closes, touches, h.degree(v), std::cmp::Reverse(v))
            })
            .unwrap();
        placed[next as usize] = true;
        order.push(next);
    }
    order
}

fn search(
    chi: &TripleColoring,
    order: &[Vertex],
    closing: &[Vec<(Vertex, Vertex)>],
    i: usize,
    image: &mut [Option<Vertex>],
    used: &mut [bool],
) -> bool {
    if i == order.len() {
        return true;
    }
    let n = used.len() as Vertex;
    let fits = |x: Vertex, image: &[Option<Vertex>]| {
        closing[i].iter().all(|&(a, b)| {
            let (ia, ib) = (image[a as usize].unwrap(), image[b as usize].unwrap());
            chi.is_red(ia, ib, x)
        })
    };
    for x in 0..n {
        if used[x as usize] || !fits(x, image) {
            continue;
        }
        image[order[i] as usize] = Some(x);
        used[x as usize] = true;
        if search(chi, order, closing, i + 1, image, used) {
            return true;
        }
        used[x as usize] = false;
        image[order[i] as usize] = None;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge_found() {
        let chi = TripleColoring::from_red_triples(6, [[1, 3, 4]]).unwrap();
        let h = ThreeGraph::new(3, [[0, 1, 2]]).unwrap();
        let m = contains_red_copy(&chi, &h, 15).unwrap().unwrap();
        let mut s = m.clone();
        s.sort_unstable();
        assert_eq!(s, vec![1, 3, 4]);
    }

    #[test]
    fn two_disjoint_edges_need_two_red_triples() {
        let chi = TripleColoring::from_red_triples(8, [[0, 1, 2]]).unwrap();
        let h = ThreeGraph::new(6, [[0, 1, 2], [3, 4, 5]]).unwrap();
        assert_eq!(contains_red_copy(&chi, &h, 15).unwrap(), None);
        let chi = TripleColoring::from_red_triples(8, [[0, 1, 2], [3, 6, 7]]).unwrap();
        let m = contains_red_copy(&chi, &h, 15).unwrap().unwrap();
        for e in h.edges() {
            assert!(chi.is_red(m[e[0] as usize], m[e[1] as usize], m[e[2] as usize]));
        }
    }

    #[test]
    fn k4_in_all_red() {
        let chi = TripleColoring::all_red(5);
        assert!(contains_red_copy(&chi, &ThreeGraph::complete(4), 15)
            .unwrap()
            .is_some());
        assert!(contains_red_copy(&chi, &ThreeGraph::complete(6), 15).is_err());
        assert!(contains_red_copy(&chi, &ThreeGraph::complete(4), 3).is_err());
    }
}
