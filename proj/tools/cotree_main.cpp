#include <atomic>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <thread>

#include "CLI11.hpp"
#include "cotree/generators.hpp"
#include "cotree/json_io.hpp"
#include "cotree/tree_extract.hpp"
#include "cotree/verify.hpp"

namespace {

using namespace cotree;

struct InputOpts {
  std::string in_path;
  std::string gen_kind;
  int n = 0;
  uint64_t seed = 1;
};

void add_input_options(CLI::App* cmd, InputOpts& o) {
  auto* in = cmd->add_option("--in", o.in_path, "read the graph from a json file");
  auto* gk =
      cmd->add_option("--gen", o.gen_kind, "generate the input graph")
          ->check(CLI::IsMember(
              {"tetrahedron", "cube", "dodecahedron", "wheel", "prism", "triangulation"}));
  cmd->add_option("--n", o.n, "vertex count for --gen wheel/prism/triangulation");
  cmd->add_option("--seed", o.seed, "seed for --gen triangulation");
  in->excludes(gk);
  gk->excludes(in);
}

PlanarGraph make_graph(const InputOpts& o) {
  if (!o.in_path.empty()) return graph_from_json(load_json_file(o.in_path));
  if (o.gen_kind.empty()) throw GraphError(Err::BadParams, "need --in FILE or --gen KIND");
  if (o.gen_kind == "tetrahedron") return gen_tetrahedron();
  if (o.gen_kind == "cube") return gen_cube();
  if (o.gen_kind == "dodecahedron") return gen_dodecahedron();
  if (o.gen_kind == "wheel") return gen_wheel(o.n ? o.n : 6);
  if (o.gen_kind == "prism") {
    int n = o.n ? o.n : 6;
    if (n % 2) throw GraphError(Err::BadParams, "a prism has an even number of vertices");
    return gen_prism(n / 2);
  }
  return gen_triangulation(o.n ? o.n : 16, o.seed);
}

void emit(const std::string& out_path, const std::string& body) {
  if (out_path.empty())
    std::cout << body;
  else
    save_text_file(out_path, body);
}

std::string render(const json& j) { return j.dump(2) + "\n"; }

int finish_report(const std::string& out_path, const ValidationReport& rep) {
  emit(out_path, render(report_to_json(rep)));
  return rep.ok() ? 0 : 1;
}

// exit 2 for unusable input or parameters, exit 1 with a report for inputs
// that parse but fail validation
int guarded(const std::function<int()>& fn) {
  try {
    return fn();
  } catch (const GraphError& ge) {
    switch (ge.code()) {
      case Err::BadInput:
      case Err::BadParams:
      case Err::TooLarge:
      case Err::TooLargeForBruteCheck:
        std::cerr << "error: " << ge.what() << "\n";
        return 2;
      default: {
        ValidationReport rep;
        rep.add(err_name(ge.code()), "input graph", ge.what());
        std::cout << render(report_to_json(rep));
        return 1;
      }
    }
  }
}

std::string ordering_text(const CanonicalOrdering& co) {
  std::string out;
  for (size_t k = 0; k < co.groups.size(); ++k) {
    out += "V" + std::to_string(k + 1);
    out += co.kinds[k] == GroupKind::Chain ? " chain:" : " singleton:";
    for (Vertex v : co.groups[k]) out += " " + std::to_string(v);
    out += "\n";
  }
  return out;
}

ValidationReport verify_one(const PlanarGraph& g, int oracle_gate, bool skip3) {
  ValidationReport rep;
  if (!skip3 && g.n <= oracle_gate) {
    if (auto sep = find_separating_pair(g, oracle_gate)) {
      rep.add("three-connected",
              "vertices " + std::to_string(sep->first) + "," + std::to_string(sep->second),
              "removing the pair disconnects the graph");
      return rep;
    }
  }
  Pipeline p;
  try {
    p = run_pipeline(g);
  } catch (const GraphError& ge) {
    rep.add(err_name(ge.code()), "pipeline", ge.what());
    return rep;
  }
  rep.merge(validate_canonical_ordering(g, p.co, oracle_gate));
  rep.merge(check_annotation(g, p.en, p.ann));
  rep.merge(check_face_orientation(g, p.ann));
  {
    ValidationReport dual_rep;
    dual_rep.merge(validate_canonical_ordering(p.dg.graph, p.dco.ordering, oracle_gate));
    dual_rep.merge(check_annotation(p.dg.graph, p.dual_en, p.dual_ann));
    dual_rep.merge(check_face_orientation(p.dg.graph, p.dual_ann));
    for (Finding& f : dual_rep.findings) f.where = "dual " + f.where;
    rep.merge(dual_rep);
  }
  rep.merge(verify_label_correspondence(g, p.ann, p.dg, p.dual_ann));
  // H properties: degree bound, connectivity, and the covering rule that an
  // edge outside H has its dual inside the dual H
  {
    std::vector<int> hdeg(g.n, 0);
    for (EdgeId e : p.h.edges) {
      hdeg[g.tail(2 * e)]++;
      hdeg[g.head(2 * e)]++;
    }
    for (Vertex v = 0; v < g.n; ++v)
      if (hdeg[v] > 5)
        rep.add("h-degree", "vertex " + std::to_string(v),
                "H degree " + std::to_string(hdeg[v]) + " exceeds 5");
    std::vector<int> comp(g.n);
    std::iota(comp.begin(), comp.end(), 0);
    auto find = [&](int x) {
      while (comp[x] != x) x = comp[x] = comp[comp[x]];
      return x;
    };
    int comps = g.n;
    for (EdgeId e : p.h.edges) {
      int a = find(g.tail(2 * e)), b = find(g.head(2 * e));
      if (a != b) {
        comp[a] = b;
        comps--;
      }
    }
    if (comps != 1) rep.add("h-connected", "H", "H leaves the graph disconnected");
    for (EdgeId e = 0; e < g.num_edges(); ++e)
      if (!p.h.rule_tags[e] && !p.dual_h.rule_tags[e])
        rep.add("h-covers", "edge " + std::to_string(e),
                "neither the edge nor its dual is in H");
  }
  try {
    auto bt = barnette_tree(g, p.ann);
    if (bt.max_deg_tree > 3)
      rep.add("barnette-degree", "tree",
              "parent tree degree " + std::to_string(bt.max_deg_tree) + " exceeds 3");
    auto ft = five_tree_from(g, p);
    if (ft.max_deg_tree > 5)
      rep.add("five-tree-degree", "tree",
              "degree " + std::to_string(ft.max_deg_tree) + " exceeds 5");
    if (ft.max_deg_cotree > 5)
      rep.add("five-cotree-degree", "co-tree",
              "degree " + std::to_string(ft.max_deg_cotree) + " exceeds 5");
    std::vector<char> in_h(g.num_edges(), 0), in_t(g.num_edges(), 0);
    for (EdgeId e : p.h.edges) in_h[e] = 1;
    for (EdgeId e : ft.tree_edges) in_t[e] = 1;
    for (EdgeId e : ft.tree_edges)
      if (!in_h[e]) rep.add("five-tree-in-h", "edge " + std::to_string(e), "tree edge outside H");
    for (EdgeId e : p.h0)
      if (!in_t[e])
        rep.add("five-tree-h0", "edge " + std::to_string(e), "zero-weight edge left out");
    auto wk = tree_to_walk(g, ft.tree_edges);
    if (wk.max_vertex_visits > 5)
      rep.add("walk-vertex-visits", "walk", std::to_string(wk.max_vertex_visits) + " exceeds 5");
    if (wk.max_face_visits > 5)
      rep.add("walk-face-visits", "walk", std::to_string(wk.max_face_visits) + " exceeds 5");
  } catch (const GraphError& ge) {
    rep.add(err_name(ge.code()), "trees", ge.what());
  }
  if (g.n <= 12) {
    uint64_t by_enum = enumerate_spanning_trees(g, nullptr, 12);
    uint64_t by_det = count_spanning_trees_matrix_tree(g);
    if (by_enum != by_det)
      rep.add("tree-count-oracle", "graph",
              "enumeration found " + std::to_string(by_enum) + " trees, determinant says " +
                  std::to_string(by_det));
  }
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spanning trees with bounded degree on 3-connected planar embeddings"};
  app.require_subcommand(1);
  int rc = 0;

  InputOpts in;
  std::string out_path, format = "json";
  int oracle_gate = 500;
  bool skip3 = false;

  auto add_common = [&](CLI::App* cmd, bool with_format = true) {
    add_input_options(cmd, in);
    cmd->add_option("--out", out_path, "write the result here instead of stdout");
    if (with_format)
      cmd->add_option("--format", format, "output format")
          ->check(CLI::IsMember({"json", "dot", "text"}));
    cmd->add_option("--oracle-gate", oracle_gate,
                    "size limit for the brute-force checks (default 500)");
    cmd->add_flag("--skip-3conn", skip3, "skip the 3-connectivity pre-check");
  };

  auto* c_gen = app.add_subcommand("gen", "generate a graph and print it");
  add_common(c_gen);
  c_gen->callback([&] {
    rc = guarded([&] {
      PlanarGraph g = make_graph(in);
      if (format == "dot")
        emit(out_path, graph_to_dot(g));
      else if (format == "text")
        emit(out_path, graph_to_text(g));
      else
        emit(out_path, render(graph_to_json(g)));
      return 0;
    });
  });

  auto* c_val = app.add_subcommand("validate", "check embedding and 3-connectivity");
  add_common(c_val, false);
  c_val->callback([&] {
    rc = guarded([&] {
      PlanarGraph g = make_graph(in);
      ValidationReport rep;
      if (!skip3 && g.n <= oracle_gate) {
        if (auto sep = find_separating_pair(g, oracle_gate))
          rep.add("three-connected",
                  "vertices " + std::to_string(sep->first) + "," + std::to_string(sep->second),
                  "removing the pair disconnects the graph");
      }
      return finish_report(out_path, rep);
    });
  });

  auto* c_ord = app.add_subcommand("order", "canonical ordering of the input");
  add_common(c_ord);
  c_ord->callback([&] {
    rc = guarded([&] {
      PlanarGraph g = make_graph(in);
      auto co = compute_canonical_ordering(g);
      auto rep = validate_canonical_ordering(g, co, oracle_gate);
      if (!rep.ok()) return finish_report(out_path, rep);
      auto en = enumerate_vertices(g, co);
      if (format == "text") {
        emit(out_path, ordering_text(co));
      } else if (format == "dot") {
        auto ann = label_edges(g, co, en);
        emit(out_path, graph_to_dot(g, &ann));
      } else {
        emit(out_path, render(ordering_to_json(co, en)));
      }
      return 0;
    });
  });

  auto* c_dord = app.add_subcommand("dual-order", "canonical orderings of graph and dual");
  add_common(c_dord);
  c_dord->callback([&] {
    rc = guarded([&] {
      PlanarGraph g = make_graph(in);
      Pipeline p = run_pipeline(g);
      if (format == "text")
        emit(out_path, "primal:\n" + ordering_text(p.co) + "dual:\n" + ordering_text(p.dco.ordering));
      else
        emit(out_path, render(dual_order_to_json(p.co, p.en, p.dco, p.dual_en)));
      return 0;
    });
  });

  Vertex opt_u = -1, opt_w = -1;
  auto* c_bar = app.add_subcommand("barnette", "degree-3 parent-edge spanning tree");
  add_common(c_bar);
  auto* ou = c_bar->add_option("--u", opt_u, "force this vertex to tree degree 1");
  auto* ow = c_bar->add_option("--w", opt_w, "the other degree-1 vertex");
  ou->needs(ow);
  ow->needs(ou);
  c_bar->callback([&] {
    rc = guarded([&] {
      PlanarGraph g = make_graph(in);
      auto co = compute_canonical_ordering(g);
      auto en = enumerate_vertices(g, co);
      auto ann = label_edges(g, co, en);
      SpanningTreePair t = opt_u >= 0 ? constrained_barnette(g, opt_u, opt_w, oracle_gate)
                                      : barnette_tree(g, ann);
      if (format == "dot")
        emit(out_path, graph_to_dot(g, &ann, &t));
      else
        emit(out_path, render(tree_to_json(g, t)));
      return 0;
    });
  });

  auto* c_five = app.add_subcommand("five-tree", "spanning tree with tree and co-tree degree <= 5");
  add_common(c_five);
  c_five->callback([&] {
    rc = guarded([&] {
      PlanarGraph g = make_graph(in);
      Pipeline p = run_pipeline(g);
      SpanningTreePair t = five_tree_from(g, p);
      if (format == "dot")
        emit(out_path, graph_to_dot(g, &p.ann, &t, &p.h));
      else
        emit(out_path, render(tree_to_json(g, t)));
      return 0;
    });
  });

  std::string walk_tree = "five";
  auto* c_walk = app.add_subcommand("walk", "closed walk around a spanning tree");
  add_common(c_walk);
  c_walk->add_option("--tree", walk_tree, "which tree to walk")
      ->check(CLI::IsMember({"five", "barnette"}));
  c_walk->callback([&] {
    rc = guarded([&] {
      PlanarGraph g = make_graph(in);
      Pipeline p = run_pipeline(g);
      SpanningTreePair t =
          walk_tree == "barnette" ? barnette_tree(g, p.ann) : five_tree_from(g, p);
      Walk wk = tree_to_walk(g, t.tree_edges);
      emit(out_path, render(walk_to_json(wk)));
      return 0;
    });
  });

  int batch = 0;
  auto* c_ver = app.add_subcommand("verify", "run the full validation battery");
  add_common(c_ver, false);
  c_ver->add_option("--batch", batch, "verify this many seeds in parallel (with --gen)");
  c_ver->callback([&] {
    rc = guarded([&] {
      if (batch <= 0) {
        PlanarGraph g = make_graph(in);
        return finish_report(out_path, verify_one(g, oracle_gate, skip3));
      }
      std::vector<ValidationReport> reps(batch);
      std::atomic<int> next{0};
      auto worker = [&] {
        for (int i = next.fetch_add(1); i < batch; i = next.fetch_add(1)) {
          try {
            InputOpts oi = in;
            oi.seed = in.seed + (uint64_t)i;
            reps[i] = verify_one(make_graph(oi), oracle_gate, skip3);
          } catch (const GraphError& ge) {
            reps[i].add(err_name(ge.code()), "instance " + std::to_string(i), ge.what());
          }
        }
      };
      unsigned tn = std::min<unsigned>(std::thread::hardware_concurrency(), (unsigned)batch);
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < std::max(1u, tn); ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
      json arr = json::array();
      bool all_ok = true;
      for (int i = 0; i < batch; ++i) {
        all_ok = all_ok && reps[i].ok();
        json row = report_to_json(reps[i]);
        row["seed"] = in.seed + (uint64_t)i;
        arr.push_back(std::move(row));
      }
      json out;
      out["ok"] = all_ok;
      out["batch"] = std::move(arr);
      emit(out_path, render(out));
      return all_ok ? 0 : 1;
    });
  });

  int repeat = 3;
  auto* c_bench = app.add_subcommand("bench", "time the pipeline at n, 2n and 4n");
  add_common(c_bench, false);
  c_bench->add_option("--repeat", repeat, "runs per size, median reported");
  c_bench->callback([&] {
    rc = guarded([&] {
      int base = in.n ? in.n : 25000;
      json runs = json::array();
      double prev = 0;
      for (int size : {base, 2 * base, 4 * base}) {
        PlanarGraph g = gen_triangulation(size, in.seed);
        std::vector<double> secs;
        for (int r = 0; r < std::max(1, repeat); ++r) {
          auto t0 = std::chrono::steady_clock::now();
          Pipeline p = run_pipeline(g);
          SpanningTreePair t = five_tree_from(g, p);
          auto t1 = std::chrono::steady_clock::now();
          if (t.tree_edges.empty()) throw GraphError(Err::InternalInvariantBroken, "empty tree");
          secs.push_back(std::chrono::duration<double>(t1 - t0).count());
        }
        std::sort(secs.begin(), secs.end());
        double med = secs[secs.size() / 2];
        json row;
        row["n"] = size;
        row["seconds"] = med;
        if (prev > 0) row["ratio"] = med / prev;
        prev = med;
        runs.push_back(std::move(row));
      }
      json out;
      out["runs"] = std::move(runs);
      emit(out_path, render(out));
      return 0;
    });
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return rc;
}
