# -*- coding: utf-8 -*-
"""Arena model"""


class Arena:
    """Parity game graph over dense vertex ids 0..n-1.

    Build instances through ``parigrade.arena.validate``; the constructor trusts its
    input and only derives the reverse adjacency and the colour set.
    """

    def __init__(self, vertices, successors, original_ids=None):
        """
        :param vertices: sequence of VertexRecord whose ids are 0..n-1 in order
        :param successors: per-vertex sorted, duplicate-free successor ids
        :param original_ids: optional per-vertex id used before remapping
        """
        self.vertices = tuple(vertices)
        self.successors = tuple(tuple(succ) for succ in successors)
        self.original_ids = tuple(original_ids) if original_ids is not None \
            else tuple(range(len(self.vertices)))

        predecessors = [[] for _ in self.vertices]
        for source, targets in enumerate(self.successors):
            for target in targets:
                predecessors[target].append(source)
        self.predecessors = tuple(tuple(pred) for pred in predecessors)
        self.colour_set = tuple(sorted({vertex.colour for vertex in self.vertices}))

    def __eq__(self, other):
        """Structural equality; original ids are bookkeeping and do not take part"""
        if isinstance(other, self.__class__):
            return self.vertices == other.vertices and self.successors == other.successors
        return False

    def __len__(self):
        return len(self.vertices)

    def __repr__(self):
        return 'Arena(n={0}, m={1}, colours={2})'.format(self.n, self.m, list(self.colour_set))

    @property
    def n(self):
        return len(self.vertices)

    @property
    def m(self):
        return sum(len(succ) for succ in self.successors)

    def owner(self, vertex):
        return self.vertices[vertex].owner

    def colour(self, vertex):
        return self.vertices[vertex].colour

    def vertices_of(self, player):
        """Ids of the vertices owned by player"""
        return [vertex.id for vertex in self.vertices if vertex.owner is player]

    def has_edge(self, source, target):
        return target in self.successors[source]

    def edges(self):
        """Iterate over (source, target) pairs in ascending order"""
        for source, targets in enumerate(self.successors):
            for target in targets:
                yield source, target
