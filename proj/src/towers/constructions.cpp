#include "towers/builder.hpp"

namespace invfield {

using detail::ActText;
using detail::AuxText;
using detail::Lets;
using detail::StepText;

template <class F>
const RatFunc<F>& GeneratorSet<F>::at(std::string_view name) const {
  for (size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return gens[i];
  }
  fail(ErrorCode::UnknownVariable, "no generator named '" + std::string(name) + "'");
}

template <class F>
Ambient Tower<F>::level_ambient(size_t j) const {
  if (j == 0) return base;
  return Ambient(steps.at(j - 1).gens.names);
}

namespace {

// Masuda's quotients on the variables (a, b, c).
std::string masuda_den(const std::string& a, const std::string& b, const std::string& c) {
  return "(" + a + "^2+" + b + "^2+" + c + "^2-" + a + "*" + b + "-" + b + "*" + c + "-" + c + "*" + a + ")";
}
std::string masuda_u(const std::string& a, const std::string& b, const std::string& c) {
  return "(" + a + "^2*" + b + "+" + b + "^2*" + c + "+" + c + "^2*" + a + "-3*" + a + "*" + b + "*" + c + ")/" +
         masuda_den(a, b, c);
}
std::string masuda_v(const std::string& a, const std::string& b, const std::string& c) {
  return "(" + a + "*" + b + "^2+" + b + "*" + c + "^2+" + c + "*" + a + "^2-3*" + a + "*" + b + "*" + c + ")/" +
         masuda_den(a, b, c);
}

// Certificate pieces for one Masuda block: variables (a, b, c) with
// invariants (s, u, v). The cubic has roots a, b, c; b is recovered
// rationally from a.
struct MasudaBlock {
  AuxText aux;
  Lets recon;
};

MasudaBlock masuda_block(const std::string& a, const std::string& b, const std::string& c, const std::string& s,
                         const std::string& u, const std::string& v) {
  const std::string e2 = "(" + s + "*(" + u + "+" + v + ")-3*(" + u + "^2-" + u + "*" + v + "+" + v + "^2))";
  const std::string e3 = "(" + s + "*" + u + "*" + v + "-" + u + "^3-" + v + "^3)";
  MasudaBlock m;
  m.aux = {a, a, "T^3-" + s + "*T^2+" + e2 + "*T-" + e3};
  m.recon = {
      {b, "(" + a + "^2+(" + v + "-" + s + ")*" + a + "+" + s + "*" + u + "-2*" + u + "^2+2*" + u + "*" + v + "-2*" +
              v + "^2)/(" + u + "-" + v + ")"},
      {c, s + "-" + a + "-" + b},
  };
  return m;
}

StepText masuda_step() {
  const auto& cat = catalog();
  StepText s;
  s.label = "C3xC3";
  s.names = {"u1", "u2", "u3", "u4", "u5", "u6"};
  s.defs = {"x1+x2+x3", masuda_u("x1", "x2", "x3"), masuda_v("x1", "x2", "x3"),
            "x4+x5+x6", masuda_u("x4", "x5", "x6"), masuda_v("x4", "x5", "x6")};
  s.acting = {{"sigma1", cat.sigma1, {}}, {"sigma2", cat.sigma2, {}}};
  auto b1 = masuda_block("x1", "x2", "x3", "u1", "u2", "u3");
  auto b2 = masuda_block("x4", "x5", "x6", "u4", "u5", "u6");
  s.aux = {b1.aux, b2.aux};
  s.recon = b1.recon;
  s.recon.insert(s.recon.end(), b2.recon.begin(), b2.recon.end());
  return s;
}

// Block swap on a level with names p1..p6: p1<->p4, p2<->p5, p3<->p6, and
// the quotient by it with gens q: q1=p1+p4, q2=p2+p5, q3=p3+p6, q4=p1p4,
// q5=p1p5+p4p2, q6=p1p6+p4p3. `p` lists the six old names.
StepText swap_step(const std::vector<std::string>& p, const std::string& q, const Perm& tau) {
  StepText s;
  s.label = "tau";
  for (int i = 1; i <= 6; ++i) s.names.push_back(q + std::to_string(i));
  s.defs = {p[0] + "+" + p[3], p[1] + "+" + p[4], p[2] + "+" + p[5], p[0] + "*" + p[3],
            p[0] + "*" + p[4] + "+" + p[3] + "*" + p[1], p[0] + "*" + p[5] + "+" + p[3] + "*" + p[2]};
  s.acting = {{"tau", tau, {p[3], p[4], p[5], p[0], p[1], p[2]}}};
  const std::string q1 = q + "1", q2 = q + "2", q3 = q + "3", q4 = q + "4", q5 = q + "5", q6 = q + "6";
  s.aux = {{p[0], p[0], "T^2-" + q1 + "*T+" + q4}};
  s.recon = {
      {p[3], q1 + "-" + p[0]},
      {p[1], "(" + p[0] + "*" + q2 + "-" + q5 + ")/(" + p[0] + "-" + p[3] + ")"},
      {p[4], q2 + "-" + p[1]},
      {p[2], "(" + p[0] + "*" + q3 + "-" + q6 + ")/(" + p[0] + "-" + p[3] + ")"},
      {p[5], q3 + "-" + p[2]},
  };
  return s;
}

std::vector<std::string> names6(const std::string& prefix) {
  std::vector<std::string> out;
  for (int i = 1; i <= 6; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

template <class F>
Tower<F> start(const F& field, std::string name, const Group& group) {
  Tower<F> t;
  t.name = std::move(name);
  t.group = group;
  t.field = field;
  t.base = Ambient::numbered("x", 6);
  return t;
}

template <class F>
void require_char_not(const F& field, unsigned p, const std::string& what) {
  if (field.characteristic() == p) {
    fail(ErrorCode::WrongCharacteristic, what + " is not available in characteristic " + std::to_string(p));
  }
}

// G4 chain, shared with the direct G3 chain.
template <class F>
Tower<F> g4_chain(const F& field, std::string name, const Group& group) {
  Tower<F> t = start(field, std::move(name), group);
  detail::add_step(t, masuda_step());
  detail::add_step(t, swap_step(names6("u"), "v", catalog().tau));
  t.notes.push_back("v5 is taken as u1*u5 + u4*u2, the tau-invariant form matching v6");
  return t;
}

}  // namespace

template <class F>
std::pair<RatFunc<F>, RatFunc<F>> masuda_generators(const F& field) {
  Ambient xyz({"x", "y", "z"});
  return {parse_ratfunc(field, xyz, masuda_u("x", "y", "z")), parse_ratfunc(field, xyz, masuda_v("x", "y", "z"))};
}

template <class F>
GeneratorSet<F> star_generators(const F& field) {
  Tower<F> t = start(field, "star", catalog().C3xC3);
  detail::add_step(t, masuda_step());
  return t.steps[0].gens;
}

template <class F>
GeneratorSet<F> wreath_generators(unsigned n, const F& field) {
  if (n < 2 || n > 6) fail(ErrorCode::InvalidArgument, "wreath generators need 2 <= n <= 6");
  Ambient x = Ambient::numbered("x", 2 * n);
  // Blockwise elementary symmetric functions.
  std::vector<RatFunc<F>> y;
  for (unsigned block = 0; block < 2; ++block) {
    std::vector<Poly<F>> e(n + 1, Poly<F>(field, x));
    e[0] = Poly<F>::constant(field, x, field.one());
    for (unsigned i = 0; i < n; ++i) {
      Poly<F> xi = Poly<F>::variable(field, x, block * n + i);
      for (unsigned k = i + 1; k >= 1; --k) e[k] = e[k] + e[k - 1] * xi;
    }
    for (unsigned k = 1; k <= n; ++k) y.emplace_back(e[k]);
  }
  GeneratorSet<F> out;
  out.field = field;
  out.vars = x;
  for (unsigned i = 0; i < n; ++i) out.gens.push_back(y[i] + y[n + i]);
  out.gens.push_back(y[0] * y[n]);
  for (unsigned j = 1; j < n; ++j) out.gens.push_back(y[0] * y[n + j] + y[n] * y[j]);
  for (unsigned i = 1; i <= 2 * n; ++i) out.names.push_back("z" + std::to_string(i));
  return out;
}

Group wreath_group(unsigned n) {
  if (n < 2 || n > 6) fail(ErrorCode::InvalidArgument, "wreath group needs 2 <= n <= 6");
  std::vector<uint8_t> t(2 * n), c(2 * n), s(2 * n);
  for (unsigned i = 0; i < 2 * n; ++i) {
    t[i] = c[i] = static_cast<uint8_t>(i);
    s[i] = static_cast<uint8_t>((i + n) % (2 * n));
  }
  std::swap(t[0], t[1]);
  for (unsigned i = 0; i < n; ++i) c[i] = static_cast<uint8_t>((i + 1) % n);
  return Group(2 * n, {Perm(t), Perm(c), Perm(s)}, "C2 wr S" + std::to_string(n));
}

template <class F>
Tower<F> g1_tower(const F& field) {
  const auto& cat = catalog();
  Tower<F> t = start(field, "G1", cat.G1);
  StepText s;
  s.label = "S3xS3";
  s.names = names6("y");
  s.defs = {"x1+x2+x3", "x1*x2+x1*x3+x2*x3", "x1*x2*x3", "x4+x5+x6", "x4*x5+x4*x6+x5*x6", "x4*x5*x6"};
  s.acting = {{"sigma1", cat.sigma1, {}},
              {"(12)", Perm::parse(6, "(12)"), {}},
              {"sigma2", cat.sigma2, {}},
              {"(45)", Perm::parse(6, "(45)"), {}}};
  s.aux = {{"x1", "x1", "T^3-y1*T^2+y2*T-y3"},
           {"x2", "x2", "T^2-(y1-x1)*T+y3/x1"},
           {"x4", "x4", "T^3-y4*T^2+y5*T-y6"},
           {"x5", "x5", "T^2-(y4-x4)*T+y6/x4"}};
  s.recon = {{"x3", "y1-x1-x2"}, {"x6", "y4-x4-x5"}};
  detail::add_step(t, s);
  detail::add_step(t, swap_step(names6("y"), "z", cat.tau));
  return t;
}

template <class F>
Tower<F> g4_tower(const F& field) {
  return g4_chain(field, "G4", catalog().G4);
}

template <class F>
Tower<F> g3_tower_direct(const F& field) {
  const auto& cat = catalog();
  Tower<F> t = g4_chain(field, "G3", cat.G3);
  StepText s;
  s.label = "lambda^2";
  s.names = names6("f");
  s.labels = {"v1", "v4", "v2+v3", "v5+v6", "v2*v3", "v2*v6+v3*v5"};
  s.defs = s.labels;
  s.acting = {{"lambda^2", cat.lambda * cat.lambda, {"v1", "v3", "v2", "v4", "v6", "v5"}}};
  s.aux = {{"v2", "v2", "T^2-f3*T+f5"}};
  s.recon = {{"v1", "f1"}, {"v4", "f2"}, {"v3", "f3-v2"}, {"v6", "(f6-v3*f4)/(v2-v3)"}, {"v5", "f4-v6"}};
  detail::add_step(t, s);
  return t;
}

template <class F>
Tower<F> g2_tower(const F& field) {
  const auto& cat = catalog();
  const Perm lambda2 = cat.lambda * cat.lambda;
  Tower<F> t = start(field, "G2", cat.G2);
  detail::add_step(t, masuda_step());
  StepText w;
  w.label = "lambda^2";
  w.names = names6("w");
  w.acting = {{"lambda^2", lambda2, {"u1", "u3", "u2", "u4", "u6", "u5"}}};
  StepText f;
  f.label = "lambda";
  if (field.characteristic() != 2) {
    w.defs = {"u1", "u2+u3", "(u2-u3)/(u5-u6)", "u4", "u5+u6", "(u2-u3)*(u5-u6)"};
    w.aux = {{"d", "u2-u3", "T^2-w3*w6"}};
    w.recon = {{"u1", "w1"}, {"u4", "w4"}, {"u2", "(w2+d)/2"}, {"u3", "(w2-d)/2"},
               {"u5", "(w5+d/w3)/2"}, {"u6", "(w5-d/w3)/2"}};
    f.names = {"s3t1", "s3t2", "t3", "t4", "t5", "s3t6"};
    f.lets = {{"t1", "w1-w4"}, {"t2", "w2-w5"}, {"t3", "w3-1/w3"}, {"s3", "w3+1/w3"},
              {"t4", "w1+w4"}, {"t5", "w2+w5"}, {"t6", "w6"}};
    f.defs = {"s3*t1", "s3*t2", "t3", "t4", "t5", "s3*t6"};
    f.acting = {{"lambda", cat.lambda, {"w4", "w5", "-1/w3", "w1", "w2", "-w6"}}};
    f.aux = {{"s3", "s3", "T^2-(t3^2+4)"}};
    f.recon = {{"w3", "(s3+t3)/2"}, {"t1", "s3t1/s3"}, {"t2", "s3t2/s3"},
               {"w1", "(t4+t1)/2"}, {"w4", "(t4-t1)/2"}, {"w2", "(t5+t2)/2"},
               {"w5", "(t5-t2)/2"}, {"w6", "s3t6/s3"}};
  } else {
    w.defs = {"u1", "u2+u3", "u2*u3", "u4", "u5+u6", "u2*u6+u3*u5"};
    w.aux = {{"u2", "u2", "T^2-w2*T+w3"}};
    w.recon = {{"u1", "w1"}, {"u4", "w4"}, {"u3", "w2-u2"}, {"u6", "(w6-u3*w5)/(u2-u3)"}, {"u5", "w5-u6"}};
    f.names = names6("f");
    f.labels = {"t1", "t4", "t2", "t2*t5+t5^2", "t6+(t2*t5+t5^2)*t5/t2",
                "t3+t6*(t6+t2*t5+t5^2)/(t2*t5+t5^2)*t5/t2"};
    f.lets = {{"t1", "w1+w4"}, {"t2", "w2+w5"}, {"t3", "w5*w3/w2"}, {"t4", "w2*w1+w5*w4"},
              {"t5", "w5"}, {"t6", "w6"}, {"g", "t2*t5+t5^2"}};
    f.defs = {"t1", "t4", "t2", "g", "t6+g*t5/t2", "t3+t6*(t6+g)/g*t5/t2"};
    f.acting = {{"lambda", cat.lambda, {"w4", "w5", "(w5^2*w3+w6^2+w2*w5*w6)/w2^2", "w1", "w2", "w6+w2*w5"}}};
    f.aux = {{"t5", "w5", "T^2+f3*T+f4"}};
    f.recon = {{"t6", "f5-f4*t5/f3"}, {"t3", "f6-t6*(t6+f4)/f4*t5/f3"}, {"w5", "t5"},
               {"w2", "f3-t5"}, {"w6", "t6"}, {"w3", "t3*w2/w5"},
               {"w1", "(f2-t5*f1)/(w2-w5)"}, {"w4", "f1-w1"}};
  }
  detail::add_step(t, w);
  detail::add_step(t, f);
  return t;
}

template <class F>
Tower<F> g3_descent_zeta(const F& field) {
  if constexpr (!is_cyclo_field_v<F>) {
    fail(ErrorCode::NeedsCycloField, "the descent tower needs a field containing a cube root of unity");
  } else {
    require_char_not(field, 3, "the cube-root-of-unity descent");
    const auto& cat = catalog();
    const Perm lambda2 = cat.lambda * cat.lambda;
    Tower<F> t = start(field, "G3", cat.G3);

    StepText y;
    y.label = "linear";
    y.names = names6("y");
    y.defs = {"x1+x2+x3", "z3^2*x1+z3*x2+x3", "z3*x1+z3^2*x2+x3",
              "x4+x5+x6", "z3^2*x4+z3*x5+x6", "z3*x4+z3^2*x5+x6"};
    y.recon = {{"x1", "(y1+z3*y2+z3^2*y3)/3"}, {"x2", "(y1+z3^2*y2+z3*y3)/3"}, {"x3", "(y1+y2+y3)/3"},
               {"x4", "(y4+z3*y5+z3^2*y6)/3"}, {"x5", "(y4+z3^2*y5+z3*y6)/3"}, {"x6", "(y4+y5+y6)/3"}};
    detail::add_step(t, y);

    StepText z;
    z.label = "C3xC3";
    z.names = names6("z");
    z.defs = {"y1", "y2^2/y3", "y3^2/y2", "y4", "y5^2/y6", "y6^2/y5"};
    z.acting = {{"sigma1", cat.sigma1, {"y1", "z3*y2", "z3^2*y3", "y4", "y5", "y6"}},
                {"sigma2", cat.sigma2, {"y1", "y2", "y3", "y4", "z3*y5", "z3^2*y6"}},
                {"tau", cat.tau, {"y4", "y5", "y6", "y1", "y2", "y3"}, false},
                {"lambda^2", lambda2, {"y1", "y3", "y2", "y4", "y6", "y5"}, false}};
    z.aux = {{"y2", "y2", "T^3-z2^2*z3"}, {"y5", "y5", "T^3-z5^2*z6"}};
    z.recon = {{"y1", "z1"}, {"y3", "y2^2/z2"}, {"y4", "z4"}, {"y6", "y5^2/z5"}};
    detail::add_step(t, z);

    StepText u = swap_step(names6("z"), "u", cat.tau);
    u.acting.push_back({"sigma1", cat.sigma1, names6("z"), false});
    u.acting.push_back({"lambda^2", lambda2, {"z1", "z3", "z2", "z4", "z6", "z5"}, false});
    detail::add_step(t, u);

    StepText f;
    f.label = "lambda^2";
    f.names = names6("f");
    f.labels = {"u1", "u4", "u2+u3", "u5+u6", "u2*u3", "u2*u5+u3*u6"};
    f.defs = f.labels;
    f.acting = {{"lambda^2", lambda2, {"u1", "u3", "u2", "u4", "u6", "u5"}}};
    f.aux = {{"u2", "u2", "T^2-f3*T+f5"}};
    f.recon = {{"u1", "f1"}, {"u4", "f2"}, {"u3", "f3-u2"}, {"u5", "(f6-u3*f4)/(u2-u3)"}, {"u6", "f4-u5"}};
    detail::add_step(t, f);
    t.notes.push_back("coefficients lie in " + field.name() + "; descent to " + field.base.name() +
                      " is checked separately");
    return t;
  }
}

Tower<PrimeField> g3_char3_tower() {
  const PrimeField field(3);
  const auto& cat = catalog();
  const Perm lambda2 = cat.lambda * cat.lambda;
  Tower<PrimeField> t = start(field, "G3", cat.G3);

  StepText y;
  y.label = "linear";
  y.names = names6("y");
  y.defs = {"x1+x2+x3", "-x1+x2", "x1", "x4+x5+x6", "-x4+x5", "x4"};
  y.recon = {{"x1", "y3"}, {"x2", "y2+y3"}, {"x3", "y1-x1-x2"},
             {"x4", "y6"}, {"x5", "y5+y6"}, {"x6", "y4-x4-x5"}};
  detail::add_step(t, y);

  StepText z;
  z.label = "C3xC3";
  z.names = {"z1", "a2", "z3", "z4", "a5", "z6"};
  z.labels = {"z1", "z2^3-z2", "z3", "z4", "z5^3-z5", "z6"};
  z.lets = {{"z2", "y2/y1"}, {"z5", "y5/y4"}};
  z.defs = {"y1", "z2^3-z2", "y3/y1+z2^2-z2", "y4", "z5^3-z5", "y6/y4+z5^2-z5"};
  z.acting = {{"sigma1", cat.sigma1, {"y1", "y2+y1", "y3+y2", "y4", "y5", "y6"}},
              {"sigma2", cat.sigma2, {"y1", "y2", "y3", "y4", "y5+y4", "y6+y5"}}};
  z.aux = {{"z2", "y2/y1", "T^3-T-a2"}, {"z5", "y5/y4", "T^3-T-a5"}};
  z.recon = {{"y1", "z1"}, {"y2", "z2*z1"}, {"y3", "z1*(z3-z2^2+z2)"},
             {"y4", "z4"}, {"y5", "z5*z4"}, {"y6", "z4*(z6-z5^2+z5)"}};
  detail::add_step(t, z);

  detail::add_step(t, swap_step({"z1", "a2", "z3", "z4", "a5", "z6"}, "u", cat.tau));

  StepText f;
  f.label = "lambda^2";
  f.names = names6("f");
  f.labels = {"u1", "u2^2", "u3", "u4", "u2*u5", "u6"};
  f.defs = f.labels;
  f.acting = {{"lambda^2", lambda2, {"u1", "-u2", "u3", "u4", "-u5", "u6"}}};
  f.aux = {{"u2", "u2", "T^2-f2"}};
  f.recon = {{"u1", "f1"}, {"u3", "f3"}, {"u4", "f4"}, {"u5", "f5/u2"}, {"u6", "f6"}};
  detail::add_step(t, f);
  return t;
}

GeneratorSet<PrimeField> artin_schreier_y(unsigned p) {
  if (p != 2 && p != 3 && p != 5 && p != 7) {
    fail(ErrorCode::WrongCharacteristic, "the C_p construction is provided for p in {2, 3, 5, 7}");
  }
  const PrimeField field(p);
  Ambient x = Ambient::numbered("x", p);
  GeneratorSet<PrimeField> out;
  out.field = field;
  out.vars = x;
  // y_i = (-1)^(i-1) sum_j C(i+j-2, i-1) x_j
  for (unsigned i = 1; i <= p; ++i) {
    Poly<PrimeField> acc(field, x);
    for (unsigned j = 1; j <= p; ++j) {
      mpz_class c;
      mpz_bin_uiui(c.get_mpz_t(), i + j - 2, i - 1);
      long long cv = static_cast<long long>(mpz_fdiv_ui(c.get_mpz_t(), p));
      if (i % 2 == 0) cv = -cv;
      acc += Poly<PrimeField>::variable(field, x, j - 1).scaled(field.from_int(cv));
    }
    out.gens.emplace_back(acc);
    out.names.push_back("y" + std::to_string(i));
  }
  return out;
}

GeneratorSet<PrimeField> artin_schreier_cp(unsigned p) {
  GeneratorSet<PrimeField> y = artin_schreier_y(p);
  const PrimeField& field = y.field;
  using R = RatFunc<PrimeField>;
  const R one = R::from_int(field, y.vars, 1);
  const R theta = y.gens[1] / y.gens[0];
  GeneratorSet<PrimeField> out;
  out.field = field;
  out.vars = y.vars;
  out.gens.push_back(y.gens[0]);
  out.gens.push_back(theta.pow(p) - theta);
  // binom(theta + j - 1, j) as a rational function of theta.
  auto rising = [&](unsigned j) {
    R acc = one;
    for (unsigned k = 0; k < j; ++k) acc = acc * (theta + R::from_int(field, y.vars, k));
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), j);
    return acc.scaled(field.from_int(static_cast<long long>(mpz_fdiv_ui(fact.get_mpz_t(), p))).inv());
  };
  // z_k = sum_{j<k} (-1)^j binom(theta+j-1, j) y_{k-j} / y_0, with y_0 read as y_1
  for (unsigned k = 3; k <= p; ++k) {
    R acc(Poly<PrimeField>(field, y.vars));
    for (unsigned j = 0; j < k; ++j) {
      R term = rising(j) * (y.gens[k - j - 1] / y.gens[0]);
      acc = (j % 2) ? acc - term : acc + term;
    }
    out.gens.push_back(acc);
  }
  for (unsigned i = 1; i <= p; ++i) out.names.push_back("z" + std::to_string(i));
  return out;
}

#define INVFIELD_INSTANTIATE(F)                                                   \
  template struct GeneratorSet<F>;                                                \
  template struct Tower<F>;                                                       \
  template std::pair<RatFunc<F>, RatFunc<F>> masuda_generators(const F&);         \
  template GeneratorSet<F> star_generators(const F&);                             \
  template GeneratorSet<F> wreath_generators(unsigned, const F&);                 \
  template Tower<F> g1_tower(const F&);                                           \
  template Tower<F> g4_tower(const F&);                                           \
  template Tower<F> g3_tower_direct(const F&);                                    \
  template Tower<F> g2_tower(const F&);                                           \
  template Tower<F> g3_descent_zeta(const F&);

INVFIELD_INSTANTIATE(RationalField)
INVFIELD_INSTANTIATE(PrimeField)
INVFIELD_INSTANTIATE(CycloQ)
INVFIELD_INSTANTIATE(CycloGF)

}  // namespace invfield
