// Copyright 2026 The Triad Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "triad/io.hpp"

namespace triad::io {

namespace {

constexpr double kPixelsPerUnit = 40.0;
constexpr double kMargin = 1.0;  // grid units around the drawing

// qubit -> chain/model id, -1 if none
std::vector<int> chain_ids(const HardwareGraph& hw, const MinorEmbedding* emb) {
  std::vector<int> ids(static_cast<std::size_t>(hw.qubit_count()), -1);
  if (emb) {
    for (Vertex i = 0; i < emb->logical_graph().vertex_count(); ++i) {
      for (Vertex q : emb->model(i)) {
        if (q >= 0 && q < hw.qubit_count()) ids[static_cast<std::size_t>(q)] = i;
      }
    }
  } else if (hw.has_meta()) {
    for (std::size_t q = 0; q < ids.size(); ++q) ids[q] = hw.meta()[q].chain;
  }
  return ids;
}

int chain_total(const std::vector<int>& ids) {
  int top = -1;
  for (int id : ids) top = std::max(top, id);
  return top + 1;
}

std::set<Edge> tau_set(const MinorEmbedding* emb) {
  std::set<Edge> out;
  if (!emb) return out;
  for (const auto& t : emb->tau()) {
    if (t) out.insert(*t);
  }
  return out;
}

std::string fixed(double x, int digits = 3) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << (x == 0.0 ? 0.0 : x);  // no "-0.000"
  return os.str();
}

// Graphviz HSV triple; hue spread evenly over chains
std::string dot_color(int id, int total) {
  if (id < 0 || total <= 0) return "0.000 0.000 0.500";
  return fixed(static_cast<double>(id) / total) + " 0.800 0.850";
}

std::string svg_color(int id, int total) {
  if (id < 0 || total <= 0) return "hsl(0,0%,50%)";
  const int hue = static_cast<int>(std::lround(360.0 * id / total)) % 360;
  return "hsl(" + std::to_string(hue) + ",80%,45%)";
}

std::vector<Point> circle_layout(int n) {
  std::vector<Point> out;
  const double radius = std::max(1.0, n / (2.0 * std::numbers::pi));
  for (int k = 0; k < n; ++k) {
    const double a = 2.0 * std::numbers::pi * k / std::max(1, n);
    out.push_back({radius + radius * std::cos(a), radius + radius * std::sin(a)});
  }
  return out;
}

std::string render_dot(const std::string& name, const Graph& g,
                       const std::vector<Point>* coords,
                       const std::vector<int>& ids,
                       const std::set<Edge>& bold) {
  const int total = chain_total(ids);
  std::ostringstream os;
  os << "graph \"" << name << "\" {\n";
  os << "  node [shape=circle style=filled fontsize=8 width=0.25 fixedsize=true];\n";
  for (Vertex q = 0; q < g.vertex_count(); ++q) {
    const int id = ids[static_cast<std::size_t>(q)];
    os << "  q" << q << " [label=\"" << q << "\" fillcolor=\""
       << dot_color(id, total) << "\"";
    if (id >= 0) os << " chain=" << id;
    if (coords) {
      const Point& p = (*coords)[static_cast<std::size_t>(q)];
      os << " pos=\"" << fixed(p.x) << "," << fixed(-p.y) << "!\"";
    }
    os << "];\n";
  }
  for (const Edge& e : g.edges()) {
    os << "  q" << e.u << " -- q" << e.v;
    const int a = ids[static_cast<std::size_t>(e.u)];
    if (bold.count(e)) {
      os << " [style=bold penwidth=2.5]";
    } else if (a >= 0 && a == ids[static_cast<std::size_t>(e.v)]) {
      os << " [color=\"" << dot_color(a, total) << "\"]";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string render_svg(const Graph& g, const std::vector<Point>& coords,
                       const std::vector<int>& ids, const std::set<Edge>& bold) {
  double max_x = 0.0, max_y = 0.0, min_x = 0.0, min_y = 0.0;
  for (const Point& p : coords) {
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
  }
  auto px = [&](double x) { return fixed((x - min_x + kMargin) * kPixelsPerUnit, 2); };
  auto py = [&](double y) { return fixed((y - min_y + kMargin) * kPixelsPerUnit, 2); };
  const double width = (max_x - min_x + 2 * kMargin) * kPixelsPerUnit;
  const double height = (max_y - min_y + 2 * kMargin) * kPixelsPerUnit;
  const int total = chain_total(ids);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
     << fixed(width, 2) << "\" height=\"" << fixed(height, 2) << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
     << "<g id=\"couplers\">\n";
  for (const Edge& e : g.edges()) {
    const Point& a = coords[static_cast<std::size_t>(e.u)];
    const Point& b = coords[static_cast<std::size_t>(e.v)];
    const int ia = ids[static_cast<std::size_t>(e.u)];
    const bool same = ia >= 0 && ia == ids[static_cast<std::size_t>(e.v)];
    const bool is_tau = bold.count(e) > 0;
    os << "<line x1=\"" << px(a.x) << "\" y1=\"" << py(a.y) << "\" x2=\""
       << px(b.x) << "\" y2=\"" << py(b.y) << "\" stroke=\""
       << (same ? svg_color(ia, total) : std::string("black"))
       << "\" stroke-width=\"" << (is_tau ? "3" : "1") << "\"/>\n";
  }
  os << "</g>\n<g id=\"qubits\">\n";
  for (Vertex q = 0; q < g.vertex_count(); ++q) {
    const Point& p = coords[static_cast<std::size_t>(q)];
    os << "<circle id=\"q" << q << "\" cx=\"" << px(p.x) << "\" cy=\""
       << py(p.y) << "\" r=\"" << fixed(0.1 * kPixelsPerUnit, 2)
       << "\" fill=\"" << svg_color(ids[static_cast<std::size_t>(q)], total)
       << "\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace

std::string to_dot(const Graph& g) {
  std::vector<int> ids(static_cast<std::size_t>(g.vertex_count()), -1);
  return render_dot("G", g, nullptr, ids, {});
}

std::string to_dot(const HardwareGraph& hw, const MinorEmbedding* emb) {
  return render_dot(hw.name(), hw.graph(), hw.has_coords() ? &hw.coords() : nullptr,
                    chain_ids(hw, emb), tau_set(emb));
}

std::string to_svg(const Graph& g) {
  std::vector<int> ids(static_cast<std::size_t>(g.vertex_count()), -1);
  return render_svg(g, circle_layout(g.vertex_count()), ids, {});
}

std::string to_svg(const HardwareGraph& hw, const MinorEmbedding* emb) {
  const std::vector<Point> coords =
      hw.has_coords() ? hw.coords() : circle_layout(hw.qubit_count());
  return render_svg(hw.graph(), coords, chain_ids(hw, emb), tau_set(emb));
}

}  // namespace triad::io
