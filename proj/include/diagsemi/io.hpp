#ifndef DIAGSEMI_IO_HPP_
#define DIAGSEMI_IO_HPP_

// JSON element encoding:
//
//   {"type":"pbr","degree":n,"edges":[[a,b],...]}
//   {"type":"bipartition","degree":n,"blocks":[[p,...],...]}
//   {"type":"map","degree":n,"kind":"transformation","image":[j or null,...]}
//   {"type":"map","degree":n,"kind":"binary-relation","image":[[0,1,...],...]}
//
// Points use 0..n-1 for the upper row and n..2n-1 for the lower row. Edges
// are sorted, blocks appear in canonical order with sorted points, and a
// binary relation's image is its n x n 0/1 matrix.

#include <string>
#include <vector>

#include "json.hpp"

#include "bipartition.hpp"
#include "embed.hpp"
#include "map_element.hpp"
#include "pbr.hpp"

namespace diagsemi {

  using json = nlohmann::json;

  inline json to_json(Pbr const& x) {
    json edges = json::array();
    for (auto [a, b] : x.edges()) {
      edges.push_back({a, b});
    }
    return {{"type", "pbr"}, {"degree", x.degree()}, {"edges", edges}};
  }

  inline json to_json(Bipartition const& x) {
    return {{"type", "bipartition"},
            {"degree", x.degree()},
            {"blocks", x.blocks()}};
  }

  inline json to_json(MapElement const& x) {
    json image = json::array();
    if (x.kind() == MapKind::binary_relation) {
      for (std::size_t i = 0; i < x.degree(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < x.degree(); ++j) {
          row.push_back(x.related(i, j) ? 1 : 0);
        }
        image.push_back(row);
      }
    } else {
      for (auto v : x.data()) {
        if (v == MapElement::undefined) {
          image.push_back(nullptr);
        } else {
          image.push_back(v);
        }
      }
    }
    return {{"type", "map"},
            {"degree", x.degree()},
            {"kind", std::string(to_string(x.kind()))},
            {"image", image}};
  }

  inline json to_json(AnyElement const& x) {
    return std::visit([](auto const& e) { return to_json(e); }, x);
  }

  inline AnyElement element_from_json(json const& j) {
    auto const        type = j.at("type").get<std::string>();
    std::size_t const n    = j.at("degree").get<std::size_t>();
    detail::check_degree(n);
    if (type == "pbr") {
      std::vector<std::pair<std::size_t, std::size_t>> edges;
      for (auto const& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) {
          throw Error("PBR edge must be a pair [a, b]");
        }
        edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
      }
      return Pbr::from_edges(n, edges);
    }
    if (type == "bipartition") {
      return Bipartition::from_blocks(
          n, j.at("blocks").get<std::vector<std::vector<std::size_t>>>());
    }
    if (type == "map") {
      MapKind const kind  = map_kind_from_string(j.at("kind").get<std::string>());
      json const&   image = j.at("image");
      if (image.size() != n) {
        throw Error("map image must have degree entries");
      }
      std::vector<std::uint32_t> data(n, 0);
      for (std::size_t i = 0; i < n; ++i) {
        if (kind == MapKind::binary_relation) {
          if (image[i].size() != n) {
            throw Error("binary relation matrix must be n x n");
          }
          for (std::size_t k = 0; k < n; ++k) {
            if (image[i][k].get<int>() != 0) {
              data[i] |= std::uint32_t(1) << k;
            }
          }
        } else {
          data[i] = image[i].is_null() ? MapElement::undefined
                                       : image[i].get<std::uint32_t>();
        }
      }
      return MapElement(kind, std::move(data));
    }
    throw Error("unknown element type \"" + type + "\"");
  }

  template <typename Element>
  Element element_from_json_as(json const& j) {
    auto any = element_from_json(j);
    if (auto* p = std::get_if<Element>(&any)) {
      return *p;
    }
    throw Error("JSON element has the wrong type");
  }

}  // namespace diagsemi

#endif  // DIAGSEMI_IO_HPP_
