#pragma once

#include "lattice/exact_core.hpp"

namespace lattice {

/// Dedekind-Rademacher sum sigma(a,b,t) = sum_{k=0}^{b-1} (((a*k+t)/b)) ((k/b)),
/// by direct summation. O(b).
Rational sigma_naive(const Integer& a, const Integer& b, const Rational& t);

/// Closed form for sigma(1,p,t): -p/24 + 1/(6p) + (p/2)((t/p))^2.
/// Exact for integer t; see sigma_fast for how rational t is handled.
Rational sigma_one_closed(const Integer& p, const Rational& t);

/// sigma(a,b,t) in O(log b) arithmetic steps via reciprocity descent.
/// Requires gcd(a mod b, b) = 1 unless a mod b is 0 or 1; throws NotCoprime
/// otherwise (use sigma_naive for the general case).
Rational sigma_fast(const Integer& a, const Integer& b, const Rational& t);

/// Same, additionally reporting the recursion depth (for complexity checks).
Rational sigma_fast_depth(const Integer& a, const Integer& b, const Rational& t, int& depth);

/// Rademacher's S(a,b;x,y) = (1/b) sum_k ((a(k+y)/b + x))* (((k+y)/b))*.
Rational rademacher_S(const Integer& a, const Integer& b, const Rational& x, const Rational& y);

/// Rademacher's unstarred sum without the 1/b prefactor:
/// sum_k ((a(k+y)/b + x)) (((k+y)/b)).
Rational frak_s(const Integer& a, const Integer& b, const Rational& x, const Rational& y);

/// sigma via the S conversion: b*S(a,b;t/b,0) - ((t/b))/2, minus the
/// starred-sawtooth hit terms at the indices k where (ak+t)/b is an integer.
/// Always equals sigma_naive(a,b,t).
Rational sigma_from_S(const Integer& a, const Integer& b, const Rational& t);

/// RHS of the classical Dedekind reciprocity law:
/// -1/4 + (1/12)(a/b + 1/(ab) + b/a).
/// Equals b*S(a,b;0,0) + a*S(b,a;0,0) (the prefactor-free classical sums).
Rational dedekind_reciprocity_rhs(const Integer& a, const Integer& b);

/// RHS of Rademacher's two-case reciprocity law. The law holds for the
/// prefactor-free sums: b*S(a,b;x,y) + a*S(b,a;y,x) = this value.
Rational rademacher_reciprocity_rhs(const Integer& a, const Integer& b,
                                    const Rational& x, const Rational& y);

/// RHS of the unified real-t reciprocity law:
/// equals sigma(q,p,-t) + sigma(p,q,-t) for 1 <= t <= p+q.
Rational unified_reciprocity_rhs(const Integer& p, const Integer& q, const Rational& t);

/// RHS of the integer-t (Gessel) form; t must be an integer in [1, p+q].
Rational gessel_sigma_rhs(const Integer& p, const Integer& q, const Integer& t);

} // namespace lattice
