#include "sss/fixtures.hpp"

#include <map>
#include <stdexcept>

namespace sss {

namespace {

// Unit interval glued from two half-length copies of itself; the two-object
// base 0 (point) / 1 (interval) with endpoint inclusions s, t.
const std::string kFreyd = R"(category A
objects: 0 1
morphisms:
  s : 0 -> 1
  t : 0 -> 1

module M over A
elements:
  M(0,0): e
  M(0,1): p0 ph p1
  M(1,1): lo hi
left:
  s . e = p0
  t . e = p1
right:
  lo . s = p0
  lo . t = ph
  hi . s = ph
  hi . t = p1

functor X on A
X(0): star
X(1): a b c
map s: star -> a
map t: star -> c

coalgebra midpoint on X
xi(0)[star] = e (x) star
xi(1)[a] = lo (x) a
xi(1)[b] = ph (x) star
xi(1)[c] = hi (x) c
)";

// Hom module of the parallel pair 0 => 1; its self-similarity system has no
// universal solution.
const std::string kParallelHom = R"(category P
objects: 0 1
morphisms:
  s : 0 -> 1
  t : 0 -> 1

module H over P
elements:
  H(0,0): h_id0
  H(0,1): h_s h_t
  H(1,1): h_id1
left:
  s . h_id0 = h_s
  t . h_id0 = h_t
right:
  h_id1 . s = h_s
  h_id1 . t = h_t
)";

// Discrete base, equations A = A and B = A + B; addresses at 1 realize
// the natural numbers plus a point at infinity.
const std::string kDiscreteAb = R"(category D
objects: 0 1

module M over D
elements:
  M(0,0): a00
  M(0,1): a01
  M(1,1): b11
)";

// Cofork 0 => 1 -> 2 with r after s = r after t; hom module, a circle-style
// functor that is nondegenerate, and a pinched one that is not.
const std::string kCofork = R"(category F
objects: 0 1 2
morphisms:
  s : 0 -> 1
  t : 0 -> 1
  r : 1 -> 2
  rs : 0 -> 2
compose:
  r o s = rs
  r o t = rs

module H over F
elements:
  H(0,0): k_id0
  H(0,1): k_s k_t
  H(0,2): k_rs
  H(1,1): k_id1
  H(1,2): k_r
  H(2,2): k_id2
left:
  s . k_id0 = k_s
  t . k_id0 = k_t
  r . k_s = k_rs
  r . k_t = k_rs
  r . k_id1 = k_r
  rs . k_id0 = k_rs
right:
  k_id1 . s = k_s
  k_id1 . t = k_t
  k_r . s = k_rs
  k_r . t = k_rs
  k_id2 . r = k_r
  k_id2 . rs = k_rs

functor circle on F
X(0): star
X(1): e0 e1
X(2): c
map s: star -> e0
map t: star -> e1
map r: e0 -> c
map r: e1 -> c
map rs: star -> c

functor pinch on F
X(0): star
X(1): e0 e1 f0 f1
X(2): c d
map s: star -> e0
map t: star -> e1
map r: e0 -> c
map r: e1 -> c
map r: f0 -> d
map r: f1 -> d
map rs: star -> c
)";

// Three-stage truncation of the coglobular category; hom module, the
// representable at 0 (nondegenerate) and the collapsed point functor (not).
const std::string kCoglobular3 = R"(category G
objects: 0 1 2 3
morphisms:
  s1 : 0 -> 1
  t1 : 0 -> 1
  s2 : 1 -> 2
  t2 : 1 -> 2
  s3 : 2 -> 3
  t3 : 2 -> 3
  x : 0 -> 2
  y : 0 -> 2
  p : 1 -> 3
  q : 1 -> 3
  alpha : 0 -> 3
  beta : 0 -> 3
compose:
  s2 o s1 = x
  t2 o s1 = x
  s2 o t1 = y
  t2 o t1 = y
  s3 o s2 = p
  t3 o s2 = p
  s3 o t2 = q
  t3 o t2 = q
  s3 o x = alpha
  t3 o x = alpha
  s3 o y = beta
  t3 o y = beta
  p o s1 = alpha
  q o s1 = alpha
  p o t1 = beta
  q o t1 = beta

module H over G
elements:
  H(0,0): h_id0
  H(0,1): h_s1 h_t1
  H(0,2): h_x h_y
  H(0,3): h_alpha h_beta
  H(1,1): h_id1
  H(1,2): h_s2 h_t2
  H(1,3): h_p h_q
  H(2,2): h_id2
  H(2,3): h_s3 h_t3
  H(3,3): h_id3
left:
  s1 . h_id0 = h_s1
  t1 . h_id0 = h_t1
  s2 . h_s1 = h_x
  s2 . h_t1 = h_y
  s2 . h_id1 = h_s2
  t2 . h_s1 = h_x
  t2 . h_t1 = h_y
  t2 . h_id1 = h_t2
  s3 . h_x = h_alpha
  s3 . h_y = h_beta
  s3 . h_s2 = h_p
  s3 . h_t2 = h_q
  s3 . h_id2 = h_s3
  t3 . h_x = h_alpha
  t3 . h_y = h_beta
  t3 . h_s2 = h_p
  t3 . h_t2 = h_q
  t3 . h_id2 = h_t3
  x . h_id0 = h_x
  y . h_id0 = h_y
  p . h_s1 = h_alpha
  p . h_t1 = h_beta
  p . h_id1 = h_p
  q . h_s1 = h_alpha
  q . h_t1 = h_beta
  q . h_id1 = h_q
  alpha . h_id0 = h_alpha
  beta . h_id0 = h_beta
right:
  h_id1 . s1 = h_s1
  h_id1 . t1 = h_t1
  h_s2 . s1 = h_x
  h_s2 . t1 = h_y
  h_t2 . s1 = h_x
  h_t2 . t1 = h_y
  h_p . s1 = h_alpha
  h_p . t1 = h_beta
  h_q . s1 = h_alpha
  h_q . t1 = h_beta
  h_id2 . s2 = h_s2
  h_id2 . t2 = h_t2
  h_id2 . x = h_x
  h_id2 . y = h_y
  h_s3 . s2 = h_p
  h_s3 . t2 = h_q
  h_s3 . x = h_alpha
  h_s3 . y = h_beta
  h_t3 . s2 = h_p
  h_t3 . t2 = h_q
  h_t3 . x = h_alpha
  h_t3 . y = h_beta
  h_id3 . s3 = h_s3
  h_id3 . t3 = h_t3
  h_id3 . p = h_p
  h_id3 . q = h_q
  h_id3 . alpha = h_alpha
  h_id3 . beta = h_beta

functor rep0 on G
X(0): r_id0
X(1): r_s1 r_t1
X(2): r_x r_y
X(3): r_alpha r_beta
map s1: r_id0 -> r_s1
map t1: r_id0 -> r_t1
map s2: r_s1 -> r_x
map s2: r_t1 -> r_y
map t2: r_s1 -> r_x
map t2: r_t1 -> r_y
map s3: r_x -> r_alpha
map s3: r_y -> r_beta
map t3: r_x -> r_alpha
map t3: r_y -> r_beta
map x: r_id0 -> r_x
map y: r_id0 -> r_y
map p: r_s1 -> r_alpha
map p: r_t1 -> r_beta
map q: r_s1 -> r_alpha
map q: r_t1 -> r_beta
map alpha: r_id0 -> r_alpha
map beta: r_id0 -> r_beta

functor point on G
X(0): u0
X(1): u1
X(2): u2
X(3): u3
map s1: u0 -> u1
map t1: u0 -> u1
map s2: u1 -> u2
map t2: u1 -> u2
map s3: u2 -> u3
map t3: u2 -> u3
map x: u0 -> u2
map y: u0 -> u2
map p: u1 -> u3
map q: u1 -> u3
map alpha: u0 -> u3
map beta: u0 -> u3
)";

// Quadratic Julia set system: I2 and I3 glue from copies of themselves and
// each other at finitely many distinguished points, I1 from two copies of I2,
// I0 is a point.  Only the published cardinalities and two sample actions
// constrain the tables; the rest is a consistent reconstruction.
const std::string kJulia = R"(# reconstructed: true
category J
objects: 0 1 2 3
morphisms:
  c1 : 0 -> 2
  c2 : 0 -> 2
  c3 : 0 -> 2
  c4 : 0 -> 2
  d1 : 0 -> 3
  d2 : 0 -> 3
  d3 : 0 -> 3
  d4 : 0 -> 3

module M over J
elements:
  M(0,0): z
  M(0,1): e1 e2 e3 e4
  M(2,1): u1 u2
  M(0,2): g1 g2 g3 g4 g5 g6 g7 g8
  M(2,2): L2 R2
  M(3,2): w
  M(0,3): f1 f2 f3 f4 f5 f6
  M(3,3): v1 v2
left:
  c1 . z = g1
  c2 . z = g4
  c3 . z = g5
  c4 . z = g8
  d1 . z = f2
  d2 . z = f3
  d3 . z = f5
  d4 . z = f6
right:
  u1 . c1 = e1
  u1 . c2 = e2
  u1 . c3 = e3
  u1 . c4 = e4
  u2 . c1 = e1
  u2 . c2 = e2
  u2 . c3 = e3
  u2 . c4 = e4
  L2 . c1 = g1
  L2 . c2 = g2
  L2 . c3 = g3
  L2 . c4 = g4
  R2 . c1 = g5
  R2 . c2 = g6
  R2 . c3 = g7
  R2 . c4 = g8
  w . d1 = g2
  w . d2 = g3
  w . d3 = g7
  w . d4 = g6
  v1 . d1 = f1
  v1 . d2 = f2
  v1 . d3 = f3
  v1 . d4 = f4
  v2 . d1 = f1
  v2 . d2 = f5
  v2 . d3 = f6
  v2 . d4 = f4
)";

const std::map<std::string, const std::string*>& table() {
    static const std::map<std::string, const std::string*> t = {
        {"freyd", &kFreyd},           {"parallel-hom", &kParallelHom},
        {"discrete-ab", &kDiscreteAb}, {"cofork", &kCofork},
        {"coglobular3", &kCoglobular3}, {"julia", &kJulia},
    };
    return t;
}

}  // namespace

std::vector<std::string> fixture_names() {
    std::vector<std::string> out;
    for (const auto& [name, src] : table()) out.push_back(name);
    return out;
}

const std::string& fixture_source(const std::string& name) {
    std::string key = name;
    if (!key.empty() && key.front() == '@') key.erase(key.begin());
    auto it = table().find(key);
    if (it == table().end())
        throw std::invalid_argument("unknown builtin system: " + name);
    return *it->second;
}

SystemDocument builtin_fixture(const std::string& name) {
    ParseResult r = parse_system(fixture_source(name));
    if (auto* errs = std::get_if<std::vector<ParseError>>(&r))
        throw std::logic_error("builtin system " + name + " failed to parse: " +
                               (errs->empty() ? "?" : errs->front().message));
    return std::get<SystemDocument>(std::move(r));
}

}  // namespace sss
