//! Iterative Tarjan strongly-connected components over dense u32 adjacency.

/// Component id per node, plus the component count. Ids are assigned in
/// reverse topological order of the condensation (successors get lower ids).
pub fn tarjan_scc(adj: &[Vec<u32>]) -> (Vec<u32>, usize) {
    let n = adj.len();
    const UNSET: u32 = u32::MAX;
    let mut index = vec![UNSET; n];
    let mut low = vec![0u32; n];
    let mut comp = vec![UNSET; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<u32> = Vec::new();
    let mut next_index = 0u32;
    let mut comp_count = 0usize;
    // (node, next edge position) call frames
    let mut frames: Vec<(u32, usize)> = Vec::new();

    for root in 0..n as u32 {
        if index[root as usize] != UNSET {
            continue;
        }
        frames.push((root, 0));
        index[root as usize] = next_index;
        low[root as usize] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root as usize] = true;

        while let Some(&mut (v, ref mut ei)) = frames.last_mut() {
            if *ei < adj[v as usize].len() {
                let w = adj[v as usize][*ei];
                *ei += 1;
                if index[w as usize] == UNSET {
                    index[w as usize] = next_index;
                    low[w as usize] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w as usize] = true;
                    frames.push((w, 0));
                } else if on_stack[w as usize] {
                    low[v as usize] = low[v as usize].min(index[w as usize]);
                }
            } else {
                frames.pop();
                if let Some(&mut (parent, _)) = frames.last_mut() {
                    low[parent as usize] = low[parent as usize].min(low[v as usize]);
                }
                if low[v as usize] == index[v as usize] {
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w as usize] = false;
                        comp[w as usize] = comp_count as u32;
                        if w == v {
                            break;
                        }
                    }
                    comp_count += 1;
                }
            }
        }
    }
    (comp, comp_count)
}

/// Whether component `c` contains a cycle: more than one node, or a
/// self-loop on its single node.
pub fn component_is_cyclic(adj: &[Vec<u32>], comp: &[u32], c: u32) -> bool {
    let mut size = 0usize;
    let mut self_loop = false;
    for v in 0..adj.len() {
        if comp[v] == c {
            size += 1;
            if size > 1 {
                return true;
            }
            if adj[v].contains(&(v as u32)) {
                self_loop = true;
            }
        }
    }
    self_loop
}
