"""Bell polynomials and the operator killing exp(a*x) + (ln x)^a.

The m-th derivative of (ln x)^a is x^-m times an integer combination
b(m, k) of falling factorials (a)_k. The table b(m, k) drives a small
elimination that yields, for each nonnegative integer a, one operator
annihilating exp(a*x) and every power (ln x)^(a-k) at once.
"""

from jointres import apply_to_exp, apply_to_log_power, bell_b, log_resolvent


def main():
    print("integer Bell table b(m, k):")
    for m in range(7):
        print("  ", [bell_b(m, k) for k in range(m + 1)])

    for alpha in range(4):
        R = log_resolvent(alpha)
        pretty = " + ".join(
            f"({c.const_value()})*D^{m}" for m, c in R.terms
        )
        print(f"\nalpha = {alpha}: order {R.order()}")
        print("  ", pretty)
        checks = [apply_to_exp(R, alpha).is_zero()]
        for shift in range(alpha + 1):
            out = apply_to_log_power(R, alpha, shift)
            checks.append(all(v.is_zero() for v in out.values()))
        print("   annihilates exp and every log power:", all(checks))


if __name__ == "__main__":
    main()
