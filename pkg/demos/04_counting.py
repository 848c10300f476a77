"""Counting tilings two ways: backtracking and the Kasteleyn determinant."""
from ferrotile import Partition, count_brute, count_fkt, enumerate_tilings, kasteleyn_matrix
from ferrotile.render import render_ascii

p = Partition(3, 3)
for t in enumerate_tilings(p):
    print("\n".join(render_ascii(p, t)), end="\n\n")

k = kasteleyn_matrix(Partition(2, 2))
for row in k.entries:
    print(" ".join(f"{x:+d}" for x in row))
print("det =", k.determinant())

for board in (Partition(4, 4, 4, 4), Partition(8, 6, 5, 4, 4, 1)):
    print(f"{board}: brute={count_brute(board)} fkt={count_fkt(board)}")

print("2 x n boards:", [count_fkt(Partition(n, n)) for n in range(1, 11)])
print("8 x 8 board:", count_fkt(Partition([8] * 8)))
