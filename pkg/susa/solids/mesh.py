"""

The `mesh` module models polyhedra combinatorially: labelled vertices, edges as vertex pairs and faces as vertex cycles, without coordinates. That is all the polyhedron formula `v − e + f = 2` needs.

`platonic` builds the five regular solids. The tetrahedron, octahedron and icosahedron are written out; the cube and the dodecahedron are the duals of the octahedron and the icosahedron.
"""
import dataclasses
import itertools
import typing

__all__ = (
    "PolyhedronMesh",
    "PLATONIC_SOLIDS",
    "euler_characteristic",
    "euler_characteristic_counts",
    "platonic",
    "dual",
)

Label = typing.Hashable


@dataclasses.dataclass(frozen=True)
class PolyhedronMesh:
    """
    A combinatorial polyhedron.

    Attributes:
        vertices (tuple[Label, ...]):
             Vertex labels.
        edges (tuple[frozenset[Label], ...]):
             Distinct unordered vertex pairs.
        faces (tuple[tuple[Label, ...], ...]):
             Vertex cycles; consecutive vertices (cyclically) must be joined by an edge.

    """

    vertices: tuple[Label, ...]
    edges: tuple[frozenset, ...]
    faces: tuple[tuple[Label, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(frozenset(edge) for edge in self.edges))
        object.__setattr__(self, "faces", tuple(tuple(face) for face in self.faces))
        if not (self.vertices and self.edges and self.faces):
            raise ValueError("A polyhedron mesh needs at least one vertex, edge and face")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("Mesh vertex labels must be distinct")
        if len(set(self.edges)) != len(self.edges):
            raise ValueError("Mesh edges must be distinct")
        known = set(self.vertices)
        for edge in self.edges:
            if len(edge) != 2 or not edge <= known:
                raise ValueError(f"Edge {sorted(map(str, edge))} does not join two mesh vertices")
        edges = set(self.edges)
        for face in self.faces:
            for edge in self.face_edges(face):
                if edge not in edges:
                    raise ValueError(
                        f"Face {face} uses {sorted(map(str, edge))}, which is not a mesh edge"
                    )

    @staticmethod
    def face_edges(face: typing.Sequence[Label]) -> list[frozenset]:
        return [frozenset((face[i], face[(i + 1) % len(face)])) for i in range(len(face))]

    @property
    def counts(self) -> tuple[int, int, int]:
        return len(self.vertices), len(self.edges), len(self.faces)

    @classmethod
    def from_faces(cls, faces: typing.Iterable[typing.Sequence[Label]]) -> "PolyhedronMesh":
        """Builds a mesh whose vertices and edges are exactly those its faces use."""
        faces = [tuple(face) for face in faces]
        vertices = list(dict.fromkeys(itertools.chain.from_iterable(faces)))
        edges = list(
            dict.fromkeys(
                itertools.chain.from_iterable(cls.face_edges(face) for face in faces)
            )
        )
        return cls(tuple(vertices), tuple(edges), tuple(faces))


def euler_characteristic_counts(v: int, e: int, f: int) -> int:
    return v - e + f


def euler_characteristic(m: PolyhedronMesh) -> int:
    """Returns `v − e + f`; 2 for every convex polyhedron."""
    return euler_characteristic_counts(*m.counts)


def _cyclic_faces_around(vertex: Label, faces: typing.Sequence[tuple]) -> list[int]:
    incident = [index for index, face in enumerate(faces) if vertex in face]
    ordered = [incident.pop(0)]
    while incident:
        current = set(faces[ordered[-1]])
        following = next(
            index for index in incident if len(current & set(faces[index])) == 2
        )
        incident.remove(following)
        ordered.append(following)
    return ordered


def dual(m: PolyhedronMesh) -> PolyhedronMesh:
    """
    The dual polyhedron: one vertex per face and one face per vertex.

    Dual vertices are labelled by the index of the face they stand for.
    """
    faces = m.faces
    return PolyhedronMesh.from_faces(
        tuple(_cyclic_faces_around(vertex, faces)) for vertex in m.vertices
    )


def _tetrahedron() -> PolyhedronMesh:
    return PolyhedronMesh.from_faces(itertools.combinations(range(4), 3))


def _octahedron() -> PolyhedronMesh:
    # one vertex per half axis: +x, -x, +y, -y, +z, -z
    return PolyhedronMesh.from_faces(
        (f"{sx}x", f"{sy}y", f"{sz}z") for sx, sy, sz in itertools.product("+-", repeat=3)
    )


def _icosahedron() -> PolyhedronMesh:
    # apex 0, upper ring 1..5, lower ring 6..10 (6 sits below the gap 1-2), base 11
    upper = [1, 2, 3, 4, 5]
    lower = [6, 7, 8, 9, 10]
    faces = []
    for i in range(5):
        u, u_next = upper[i], upper[(i + 1) % 5]
        l, l_next = lower[i], lower[(i + 1) % 5]
        faces += [(0, u, u_next), (u, l, u_next), (u_next, l, l_next), (11, l_next, l)]
    return PolyhedronMesh.from_faces(faces)


PLATONIC_SOLIDS: dict[str, typing.Callable[[], PolyhedronMesh]] = {
    "tetrahedron": _tetrahedron,
    "cube": lambda: dual(_octahedron()),
    "octahedron": _octahedron,
    "dodecahedron": lambda: dual(_icosahedron()),
    "icosahedron": _icosahedron,
}


def platonic(name: str) -> PolyhedronMesh:
    """
    Builds one of the five regular convex polyhedra.

    Args:
        name (str):
             `tetrahedron`, `cube`, `octahedron`, `dodecahedron` or `icosahedron`.

    Returns:
        PolyhedronMesh:
             The mesh, with 4, 6, 8, 12 or 20 faces.

    Raises:
        ValueError:
             If the name is not one of the five.

    """
    try:
        return PLATONIC_SOLIDS[name.lower()]()
    except KeyError:
        raise ValueError(
            f"Unknown regular polyhedron {name!r}; expected one of {', '.join(PLATONIC_SOLIDS)}"
        ) from None
