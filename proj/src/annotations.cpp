#include "offside/annotations.hpp"

#include <fstream>
#include <set>

namespace offside {

namespace {

using nlohmann::json;

const json& require(const json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) raise(Errc::SchemaError, where + ": missing field '" + key + "'");
  return *it;
}

std::string require_string(const json& obj, const char* key, const std::string& where) {
  const json& v = require(obj, key, where);
  if (!v.is_string()) raise(Errc::SchemaError, where + ": field '" + key + "' must be a string");
  return v.get<std::string>();
}

double require_number(const json& obj, const char* key, const std::string& where) {
  const json& v = require(obj, key, where);
  if (!v.is_number()) raise(Errc::SchemaError, where + ": field '" + key + "' must be a number");
  return v.get<double>();
}

double require_fraction(const json& obj, const char* key, const std::string& where) {
  const double v = require_number(obj, key, where);
  if (!(v >= 0.0 && v <= 1.0)) {
    raise(Errc::SchemaError, where + ": field '" + key + "' out of [0,1]");
  }
  return v;
}

}  // namespace

const char* to_string(Team t) {
  switch (t) {
    case Team::Attacking: return "attacking";
    case Team::Defending: return "defending";
    case Team::Neutral: return "neutral";
  }
  return "neutral";
}

const char* to_string(Role r) {
  switch (r) {
    case Role::Outfield: return "outfield";
    case Role::Goalkeeper: return "goalkeeper";
    case Role::Referee: return "referee";
  }
  return "outfield";
}

Team team_from_string(const std::string& s) {
  if (s == "attacking") return Team::Attacking;
  if (s == "defending") return Team::Defending;
  if (s == "neutral") return Team::Neutral;
  raise(Errc::SchemaError, "unknown team '" + s + "'");
}

Role role_from_string(const std::string& s) {
  if (s == "outfield") return Role::Outfield;
  if (s == "goalkeeper") return Role::Goalkeeper;
  if (s == "referee") return Role::Referee;
  raise(Errc::SchemaError, "unknown role '" + s + "'");
}

FrameAnnotations load_annotations(const json& doc) {
  if (!doc.is_object()) raise(Errc::SchemaError, "annotation document must be an object");
  const std::string schema = require_string(doc, "schema", "document");
  if (schema != "offside/1") {
    raise(Errc::SchemaError, "unsupported annotation schema '" + schema + "'");
  }

  FrameAnnotations ann;
  ann.frame_id = require_string(doc, "frame_id", "document");

  const json& players = require(doc, "players", "document");
  if (!players.is_array()) raise(Errc::SchemaError, "'players' must be an array");

  std::set<std::string> seen_players;
  for (const json& pj : players) {
    if (!pj.is_object()) raise(Errc::SchemaError, "player entry must be an object");
    PlayerAnnotation p;
    p.player_id = require_string(pj, "player_id", "player");
    const std::string where = "player '" + p.player_id + "'";
    if (!seen_players.insert(p.player_id).second) {
      raise(Errc::DuplicatePlayer, "duplicate player_id '" + p.player_id + "'");
    }
    p.team = team_from_string(require_string(pj, "team", where));
    p.role = role_from_string(require_string(pj, "role", where));
    if (p.role == Role::Referee && p.team != Team::Neutral) {
      raise(Errc::SchemaError, where + ": a referee must have team 'neutral'");
    }
    p.det_score = require_fraction(pj, "det_score", where);

    const json& bbox = require(pj, "bbox", where);
    if (!bbox.is_array() || bbox.size() != 4) {
      raise(Errc::SchemaError, where + ": 'bbox' must be [x,y,w,h]");
    }
    for (std::size_t i = 0; i < 4; ++i) {
      if (!bbox[i].is_number()) raise(Errc::SchemaError, where + ": bbox entries must be numbers");
      p.bbox[i] = bbox[i].get<double>();
    }

    const json& kps = require(pj, "keypoints", where);
    if (!kps.is_array()) raise(Errc::SchemaError, where + ": 'keypoints' must be an array");
    std::set<int> seen_kp;
    for (const json& kj : kps) {
      if (!kj.is_object()) raise(Errc::SchemaError, where + ": keypoint entry must be an object");
      Keypoint kp;
      const double id = require_number(kj, "id", where);
      kp.id = static_cast<int>(id);
      if (kp.id != id || kp.id < 0 || kp.id > 16) {
        raise(Errc::SchemaError, where + ": keypoint id must be an integer in [0,16]");
      }
      if (!seen_kp.insert(kp.id).second) {
        raise(Errc::DuplicateKeypoint,
              where + ": duplicate keypoint id " + std::to_string(kp.id));
      }
      kp.x = require_number(kj, "x", where);
      kp.y = require_number(kj, "y", where);
      kp.confidence = require_fraction(kj, "confidence", where);
      p.keypoints.push_back(kp);
    }
    ann.players.push_back(std::move(p));
  }
  return ann;
}

FrameAnnotations load_annotations_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(Errc::IoError, "cannot open " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    raise(Errc::SchemaError, path + ": " + e.what());
  }
  return load_annotations(doc);
}

nlohmann::json annotations_to_json(const FrameAnnotations& ann) {
  json players = json::array();
  for (const PlayerAnnotation& p : ann.players) {
    json kps = json::array();
    for (const Keypoint& kp : p.keypoints) {
      kps.push_back({{"id", kp.id}, {"x", kp.x}, {"y", kp.y}, {"confidence", kp.confidence}});
    }
    players.push_back({{"player_id", p.player_id},
                       {"team", to_string(p.team)},
                       {"role", to_string(p.role)},
                       {"det_score", p.det_score},
                       {"bbox", p.bbox},
                       {"keypoints", std::move(kps)}});
  }
  return json{{"schema", "offside/1"}, {"frame_id", ann.frame_id}, {"players", std::move(players)}};
}

void save_annotations_file(const std::string& path, const FrameAnnotations& ann) {
  std::ofstream out(path);
  if (!out) raise(Errc::IoError, "cannot open " + path + " for writing");
  out << annotations_to_json(ann).dump(2) << "\n";
  if (!out) raise(Errc::IoError, "write failed for " + path);
}

}  // namespace offside
