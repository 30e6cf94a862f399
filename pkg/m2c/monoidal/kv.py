"""
The three interchange-style tensorators of the Kapranov-Voevodsky presentation,
expressed through the single tensorator φ.
"""

from m2c.core.cells import OneCellPath, TwoCellExpr, inverse, vcomp
from m2c.core.errors import NonComposable


def kv_tensorator_fg(md, f: OneCellPath, g: OneCellPath) -> TwoCellExpr:
    """
    ⊗_{f,g}: (A⊗g)·(f⊗B') ⇒ (f⊗B)·(A'⊗g) for f: A → A', g: B → B'.
    Built as φ_{f,B',A,g} followed by the inverse of φ_{A',g,f,B}; the index order of
    the inverse is the one whose boundary type-checks.
    """
    idA, idA2 = OneCellPath.identity(f.src), OneCellPath.identity(f.tgt)
    idB, idB2 = OneCellPath.identity(g.src), OneCellPath.identity(g.tgt)
    return vcomp(md.tensorator(f, idB2, idA, g),
                 inverse(md.tensorator(idA2, g, f, idB)))


def kv_tensorator_ffB(md, f2: OneCellPath, f1: OneCellPath, b: str) -> TwoCellExpr:
    """⊗_{f2,f1,B} = φ_{f2,B,f1,B}: (f1⊗B)·(f2⊗B) ⇒ (f1·f2)⊗B."""
    if f1.tgt != f2.src:
        raise NonComposable(f"{f1.label()} does not compose with {f2.label()}")
    idB = OneCellPath.identity(b)
    return md.tensorator(f2, idB, f1, idB)


def kv_tensorator_Agg(md, a: str, g2: OneCellPath, g1: OneCellPath) -> TwoCellExpr:
    """⊗_{A,g2,g1} = φ_{A,g2,A,g1}: (A⊗g1)·(A⊗g2) ⇒ A⊗(g1·g2)."""
    if g1.tgt != g2.src:
        raise NonComposable(f"{g1.label()} does not compose with {g2.label()}")
    idA = OneCellPath.identity(a)
    return md.tensorator(idA, g2, idA, g1)
