"""Learning-portal service for a Combinatorics & Graph Theory course.

The package couples a content portal (logical pages, prerequisite corpus,
moderated student contributions) with an exact compute engine for the graph
families the course studies: generators, Wiener index, Hosoya-Wiener
polynomial, and spanning-tree counts/censuses, all in exact integer or
rational arithmetic.
"""

__version__ = "0.1.0"
