"""
Tree node of the compressed quadtree
"""
from dataclasses import dataclass, field
from typing import Dict, Iterator, Optional

from geometry import CanonicalCell, QuantizedPoint


@dataclass(eq=False)
class Node:
    """One node of the tree

    ``children`` is sparse and keyed by quadrant index of ``cell``; a child's
    cell may sit several levels below the quadrant (a compressed edge).
    ``conflict_list`` holds the not-yet-inserted points inside this node's
    tile, keyed by point id.
    """
    cell: CanonicalCell
    children: Dict[int, "Node"] = field(default_factory=dict)
    stored_point: Optional[QuantizedPoint] = None
    conflict_list: Dict[int, QuantizedPoint] = field(default_factory=dict)
    parent: Optional["Node"] = None

    @property
    def is_leaf(self) -> bool:
        return not self.children

    @property
    def is_root(self) -> bool:
        return self.parent is None

    def attach(self, quadrant: int, child: "Node") -> None:
        self.children[quadrant] = child
        child.parent = self

    def preorder(self) -> Iterator["Node"]:
        """Nodes of this subtree, children visited in ascending quadrant index"""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            for q in sorted(node.children, reverse=True):
                stack.append(node.children[q])

    def depth(self) -> int:
        depth = 0
        node = self
        while node.parent is not None:
            node = node.parent
            depth += 1
        return depth

    def __repr__(self) -> str:
        kind = "leaf" if self.is_leaf else f"{len(self.children)} children"
        return f"Node({self.cell}, {kind}, cl={len(self.conflict_list)})"
