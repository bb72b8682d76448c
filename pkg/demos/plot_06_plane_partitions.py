"""
Plane partitions and their diagonal slices
==========================================

Cutting a plane partition along diagonals gives a sequence of ordinary
partitions that interlace, rising to the main diagonal and falling after
it.  The sequence determines the plane partition.
"""

from fockcat.planepart import (
    PlanePartition,
    count_plane_partitions,
    diagonal_slices,
    enumerate_plane_partitions,
    from_slices,
    trace,
)

spacer = "_" * 60

print("counts by volume:", [count_plane_partitions(v) for v in range(11)])

print(spacer)

for pi in enumerate_plane_partitions(3):
    print(f"{str(pi):16s} slices {diagonal_slices(pi)}  trace {trace(pi)}")

print(spacer)

pi = PlanePartition([[3, 2, 1], [2, 1], [1]])
slices = diagonal_slices(pi)
print("pi     :", pi)
print("slices :", slices)
print("rebuilt:", from_slices(slices))
