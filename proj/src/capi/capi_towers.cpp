#include "capi/common.hpp"

using namespace invfield;
using namespace invfield::capi;

namespace {

template <class F>
io::json describe(const Tower<F>& t) {
  io::json steps = io::json::array();
  for (const auto& s : t.steps) {
    io::json acting = io::json::array();
    for (const auto& a : s.acting) {
      acting.push_back({{"label", a.label}, {"perm", a.sigma.to_string()}, {"generates", a.generates}});
    }
    io::json gens = io::json::array();
    for (size_t i = 0; i < s.gens.size(); ++i) {
      gens.push_back({{"name", s.gens.names[i]}, {"label", s.gens.label(i)}, {"text", s.gens.gens[i].to_string()}});
    }
    io::json aux = io::json::array();
    for (const auto& a : s.cert.aux) {
      aux.push_back({{"name", a.name},
                     {"definition", a.definition.to_string()},
                     {"minpoly", a.minpoly_text},
                     {"degree", a.degree()}});
    }
    io::json recon = io::json::array();
    for (const auto& r : s.cert.reconstruction) recon.push_back(r.to_string());
    steps.push_back({{"label", s.label},
                     {"acting", acting},
                     {"generators", gens},
                     {"auxiliaries", aux},
                     {"reconstruction", recon},
                     {"degree", s.cert.degree()}});
  }
  return {{"tower", t.name},
          {"group", t.group.name()},
          {"group_order", t.group.order()},
          {"field", t.field.name()},
          {"steps", steps},
          {"notes", t.notes}};
}

io::json rank_obligation(const std::string& subject, size_t rank, size_t want) {
  return {{"kind", "jacobian-rank"}, {"subject", subject}, {"rank", rank}, {"expected", want}, {"pass", rank == want}};
}

}  // namespace

extern "C" {

ivf_status ivf_tower_build(const char* group, unsigned characteristic, const char* path, ivf_tower** out) {
  IVF_REQUIRE(group);
  IVF_REQUIRE(out);
  return guarded([&] {
    const std::string g = group;
    const std::string p = path ? path : "direct";
    auto t = std::make_unique<ivf_tower>();
    t->group = g;
    t->path = p;
    if (g != "G1" && g != "G2" && g != "G3" && g != "G4") {
      fail(ErrorCode::InvalidArgument, "towers exist for G1, G2, G3 and G4, not '" + g + "'");
    }
    if (p == "direct") {
      std::visit(
          [&](const auto& f) {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, RationalField> || std::is_same_v<F, PrimeField>) {
              if (g == "G1") t->v = g1_tower(f);
              else if (g == "G2") t->v = g2_tower(f);
              else if (g == "G3") t->v = g3_tower_direct(f);
              else t->v = g4_tower(f);
            }
          },
          plain_field(characteristic));
    } else if (p == "descent") {
      if (g != "G3") fail(ErrorCode::InvalidArgument, "the descent path exists for G3 only");
      if (characteristic == 3) fail(ErrorCode::WrongCharacteristic, "the descent path needs characteristic other than 3");
      if (characteristic == 0) t->v = g3_descent_zeta(CycloQ{});
      else t->v = g3_descent_zeta(CycloGF(PrimeField(characteristic)));
    } else if (p == "artin-schreier") {
      if (g != "G3") fail(ErrorCode::InvalidArgument, "the Artin-Schreier path exists for G3 only");
      if (characteristic != 3) fail(ErrorCode::WrongCharacteristic, "the Artin-Schreier path needs characteristic 3");
      t->v = g3_char3_tower();
    } else {
      fail(ErrorCode::InvalidArgument, "unknown path '" + p + "'");
    }
    *out = t.release();
  });
}

void ivf_tower_free(ivf_tower* t) { delete t; }

ivf_status ivf_tower_describe_json(const ivf_tower* t, char** out) {
  IVF_REQUIRE(t);
  IVF_REQUIRE(out);
  return guarded([&] {
    io::json j = std::visit([](const auto& tw) { return describe(tw); }, t->v);
    j["path"] = t->path;
    *out = dup_json(j);
  });
}

ivf_status ivf_tower_generators_json(const ivf_tower* t, char** out) {
  IVF_REQUIRE(t);
  IVF_REQUIRE(out);
  return guarded([&] {
    io::json j = std::visit([](const auto& tw) { return io::to_json(tw.final_set()); }, t->v);
    j["group"] = t->group;
    j["path"] = t->path;
    *out = dup_json(j);
  });
}

ivf_status ivf_tower_x_forms_json(const ivf_tower* t, char** out) {
  IVF_REQUIRE(t);
  IVF_REQUIRE(out);
  return guarded([&] {
    io::json j = std::visit([](const auto& tw) { return io::to_json(final_x_forms(tw)); }, t->v);
    j["group"] = t->group;
    j["path"] = t->path;
    *out = dup_json(j);
  });
}

ivf_status ivf_tower_mutate(const ivf_tower* t, const char* name, const char* plus, ivf_tower** out) {
  IVF_REQUIRE(t);
  IVF_REQUIRE(name);
  IVF_REQUIRE(out);
  return guarded([&] {
    auto m = std::make_unique<ivf_tower>(*t);
    std::optional<std::string> other;
    if (plus) other = plus;
    std::visit([&](auto& tw) { tw = mutate(tw, name, other); }, m->v);
    *out = m.release();
  });
}

ivf_status ivf_tower_verify(const ivf_tower* t, uint64_t seed, int* pass, char** report_json) {
  IVF_REQUIRE(t);
  IVF_REQUIRE(pass);
  return guarded([&] {
    TowerReport r = std::visit(
        [&](const auto& tw) {
          TowerReport rep = verify_tower(tw, seed);
          using F = std::decay_t<decltype(tw.field)>;
          if constexpr (is_cyclo_field_v<F>) {
            for (auto& o : verify_descent(tw, seed)) rep.checks.push_back(std::move(o));
          }
          return rep;
        },
        t->v);
    *pass = r.pass() ? 1 : 0;
    if (report_json) {
      io::json j = io::to_json(r);
      j["group"] = t->group;
      j["path"] = t->path;
      *report_json = dup_json(j);
    }
  });
}

ivf_status ivf_tower_invariance(const ivf_tower* t, const char* group, int* pass, char** report_json) {
  IVF_REQUIRE(t);
  IVF_REQUIRE(pass);
  return guarded([&] {
    const Group& g = catalog().by_name(group ? group : t->group);
    InvarianceReport r = std::visit([&](const auto& tw) { return verify_invariance(final_x_forms(tw), g); }, t->v);
    *pass = r.pass() ? 1 : 0;
    if (report_json) {
      io::json j = io::to_json(r);
      j["group"] = g.name();
      *report_json = dup_json(j);
    }
  });
}

ivf_status ivf_masuda_report(unsigned characteristic, uint64_t seed, int* pass, char** report_json) {
  IVF_REQUIRE(pass);
  return guarded([&] {
    io::json j = std::visit(
        [&](const auto& f) -> io::json {
          using F = std::decay_t<decltype(f)>;
          if constexpr (is_cyclo_field_v<F>) {
            fail(ErrorCode::Internal, "unreachable");
          } else {
            auto [u, v] = masuda_generators(f);
            const Ambient& xyz = u.ambient();
            const std::vector<size_t> cyc{1, 2, 0};
            const bool fu = u.apply_perm(cyc) == u;
            const bool fv = v.apply_perm(cyc) == v;
            GeneratorSet<F> gs{f, xyz, {"s", "u", "v"}, {"x+y+z", "u", "v"}, {}};
            gs.gens.push_back(RatFunc<F>::variable(f, xyz, 0) + RatFunc<F>::variable(f, xyz, 1) +
                              RatFunc<F>::variable(f, xyz, 2));
            gs.gens.push_back(u);
            gs.gens.push_back(v);
            const size_t rank = jacobian_rank_random(gs, seed);
            io::json out = {{"field", f.name()},
                            {"seed", seed},
                            {"u", u.to_string()},
                            {"v", v.to_string()},
                            {"checks",
                             {{{"kind", "invariance"}, {"subject", "u"}, {"perm", "(123)"}, {"pass", fu}},
                              {{"kind", "invariance"}, {"subject", "v"}, {"perm", "(123)"}, {"pass", fv}},
                              rank_obligation("x+y+z, u, v", rank, 3)}}};
            // Sample value at (1, 2, 4) when it is not a pole.
            std::vector<typename F::Elem> pt{f.from_int(1), f.from_int(2), f.from_int(4)};
            if (!u.den().eval(pt).is_zero()) {
              out["at_1_2_4"] = {{"u", f.format(u.eval(pt))}, {"v", f.format(v.eval(pt))}};
            }
            out["pass"] = fu && fv && rank == 3;
            return out;
          }
        },
        plain_field(characteristic));
    *pass = j["pass"].get<bool>() ? 1 : 0;
    if (report_json) *report_json = dup_json(j);
  });
}

ivf_status ivf_wreath_report(unsigned n, unsigned characteristic, uint64_t seed, int* pass, char** report_json) {
  IVF_REQUIRE(pass);
  return guarded([&] {
    io::json j = std::visit(
        [&](const auto& f) -> io::json {
          using F = std::decay_t<decltype(f)>;
          if constexpr (is_cyclo_field_v<F>) {
            fail(ErrorCode::Internal, "unreachable");
          } else {
            GeneratorSet<F> gs = wreath_generators(n, f);
            InvarianceReport inv = verify_invariance(gs, wreath_group(n));
            const size_t rank = jacobian_rank_random(gs, seed);
            io::json out = io::to_json(gs);
            out["n"] = n;
            out["seed"] = seed;
            out["invariance"] = io::to_json(inv);
            out["rank"] = rank_obligation("wreath generators", rank, 2 * n);
            out["pass"] = inv.pass() && rank == 2 * n;
            return out;
          }
        },
        plain_field(characteristic));
    *pass = j["pass"].get<bool>() ? 1 : 0;
    if (report_json) *report_json = dup_json(j);
  });
}

ivf_status ivf_artin_schreier_report(unsigned p, uint64_t seed, int* pass, char** report_json) {
  IVF_REQUIRE(pass);
  return guarded([&] {
    GeneratorSet<PrimeField> y = artin_schreier_y(p);
    GeneratorSet<PrimeField> z = artin_schreier_cp(p);
    std::vector<std::vector<unsigned>> cyc(1);
    for (unsigned i = 1; i <= p; ++i) cyc[0].push_back(i);
    const Perm sigma = Perm::from_cycles(p, cyc);
    const auto img = sigma.images();
    // The transform turns the p-cycle into y1 -> y1, yi -> yi + y(i-1).
    io::json shifts = io::json::array();
    bool shift_ok = true;
    for (unsigned i = 0; i < p; ++i) {
      RatFunc<PrimeField> want = i == 0 ? y.gens[0] : y.gens[i] + y.gens[i - 1];
      const bool ok = y.gens[i].apply_perm(img) == want;
      shift_ok = shift_ok && ok;
      shifts.push_back({{"subject", y.names[i]}, {"pass", ok}});
    }
    InvarianceReport inv = verify_invariance(z, Group(p, {sigma}, "C" + std::to_string(p)));
    const size_t rank = jacobian_rank_random(z, seed);
    io::json j = io::to_json(z);
    j["p"] = p;
    j["seed"] = seed;
    j["cycle"] = sigma.to_string();
    j["y_action"] = shifts;
    j["invariance"] = io::to_json(inv);
    j["rank"] = rank_obligation("z1..zp", rank, p);
    j["pass"] = shift_ok && inv.pass() && rank == p;
    *pass = j["pass"].get<bool>() ? 1 : 0;
    if (report_json) *report_json = dup_json(j);
  });
}

}  // extern "C"
