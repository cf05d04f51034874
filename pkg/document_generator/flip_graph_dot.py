from toric.hilbert_scheme import FlipGraph


def _quote(text: str) -> str:
    return '"' + text.replace('"', '\\"') + '"'


def flip_graph_to_dot(graph: FlipGraph, name: str = "flips") -> str:
    """Graphviz text; vertices are labeled by generators, edges by flip
    binomials, and fake flips appear as dashed self-loops."""
    lines = [f"graph {_quote(name)} {{", f"  // shape: {graph.shape}"]
    for k, I in enumerate(graph.vertices):
        lines.append(f"  I{k + 1} [label={_quote(str(I))}];")
    for a, b, flip in graph.edges:
        lines.append(f"  I{a + 1} -- I{b + 1} [label={_quote(str(flip.binomial))}];")
    for k in sorted(graph.fake):
        for flip in graph.fake[k]:
            lines.append(f"  I{k + 1} -- I{k + 1} [label={_quote(str(flip.binomial))}, style=dashed];")
    lines.append("}")
    return "\n".join(lines) + "\n"
