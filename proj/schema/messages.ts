// Generated by `viewsync gen-schema`. Do not edit.
// Schema version: viewsync-schema/1

export const SCHEMA_HASH = "87d2757332e66ad9408301c53ec8209c585ac3a0407cfe65faff2186dac865cd";

/** dedup: none */
export interface ClientHello {
  type: "ClientHello";
  schema_hash: string;
}

/** dedup: none */
export interface ServerAccept {
  type: "ServerAccept";
  client_id: number;
  schema_hash: string;
}

/** dedup: none */
export interface ServerReject {
  type: "ServerReject";
  reason: string;
  server_hash: string;
  client_hash: string;
}

/** dedup: none */
export interface Ack {
  type: "Ack";
  seq: number;
}

/** dedup: by_key */
export interface SceneFrameUpsert {
  type: "SceneFrameUpsert";
  path: string;
  wxyz: [number, number, number, number];
  position: [number, number, number];
  visible: boolean;
  clickable: boolean;
  axes_length: number;
  axes_radius: number;
  show_axes: boolean;
}

/** dedup: by_key */
export interface SceneGridUpsert {
  type: "SceneGridUpsert";
  path: string;
  wxyz: [number, number, number, number];
  position: [number, number, number];
  visible: boolean;
  clickable: boolean;
  width: number;
  height: number;
  cell_size: number;
  color: [number, number, number];
}

/** dedup: by_key */
export interface ScenePointCloudUpsert {
  type: "ScenePointCloudUpsert";
  path: string;
  wxyz: [number, number, number, number];
  position: [number, number, number];
  visible: boolean;
  clickable: boolean;
  positions: Uint8Array;
  colors: Uint8Array;
  point_size: number;
}

/** dedup: by_key */
export interface SceneLineSegmentsUpsert {
  type: "SceneLineSegmentsUpsert";
  path: string;
  wxyz: [number, number, number, number];
  position: [number, number, number];
  visible: boolean;
  clickable: boolean;
  points: Uint8Array;
  colors: Uint8Array;
  line_width: number;
}

/** dedup: by_key */
export interface SceneMeshUpsert {
  type: "SceneMeshUpsert";
  path: string;
  wxyz: [number, number, number, number];
  position: [number, number, number];
  visible: boolean;
  clickable: boolean;
  vertices: Uint8Array;
  faces: number[];
  color: [number, number, number];
  wireframe: boolean;
  flat_shading: boolean;
}

/** dedup: by_key */
export interface SceneBoxUpsert {
  type: "SceneBoxUpsert";
  path: string;
  wxyz: [number, number, number, number];
  position: [number, number, number];
  visible: boolean;
  clickable: boolean;
  dimensions: [number, number, number];
  color: [number, number, number];
  wireframe: boolean;
}

/** dedup: by_key */
export interface SceneIcosphereUpsert {
  type: "SceneIcosphereUpsert";
  path: string;
  wxyz: [number, number, number, number];
  position: [number, number, number];
  visible: boolean;
  clickable: boolean;
  radius: number;
  subdivisions: number;
  color: [number, number, number];
}

/** dedup: by_key */
export interface SceneCameraFrustumUpsert {
  type: "SceneCameraFrustumUpsert";
  path: string;
  wxyz: [number, number, number, number];
  position: [number, number, number];
  visible: boolean;
  clickable: boolean;
  fov: number;
  aspect: number;
  scale: number;
  color: [number, number, number];
  line_width: number;
}

/** dedup: by_key */
export interface SceneLabelUpsert {
  type: "SceneLabelUpsert";
  path: string;
  wxyz: [number, number, number, number];
  position: [number, number, number];
  visible: boolean;
  clickable: boolean;
  text: string;
  font_height: number;
}

/** dedup: by_key */
export interface SceneImageUpsert {
  type: "SceneImageUpsert";
  path: string;
  wxyz: [number, number, number, number];
  position: [number, number, number];
  visible: boolean;
  clickable: boolean;
  width: number;
  height: number;
  rgb: Uint8Array;
  render_width: number;
  render_height: number;
}

/** dedup: by_key */
export interface ScenePlaceholderUpsert {
  type: "ScenePlaceholderUpsert";
  path: string;
  wxyz: [number, number, number, number];
  position: [number, number, number];
  visible: boolean;
  clickable: boolean;
}

/** dedup: by_key */
export interface SceneNodeSetBool {
  type: "SceneNodeSetBool";
  path: string;
  prop: string;
  value: boolean;
}

/** dedup: by_key */
export interface SceneNodeSetInt {
  type: "SceneNodeSetInt";
  path: string;
  prop: string;
  value: number;
}

/** dedup: by_key */
export interface SceneNodeSetFloat {
  type: "SceneNodeSetFloat";
  path: string;
  prop: string;
  value: number;
}

/** dedup: by_key */
export interface SceneNodeSetString {
  type: "SceneNodeSetString";
  path: string;
  prop: string;
  value: string;
}

/** dedup: by_key */
export interface SceneNodeSetBytes {
  type: "SceneNodeSetBytes";
  path: string;
  prop: string;
  value: Uint8Array;
}

/** dedup: by_key */
export interface SceneNodeSetFloat32Array {
  type: "SceneNodeSetFloat32Array";
  path: string;
  prop: string;
  value: Uint8Array;
}

/** dedup: by_key */
export interface SceneNodeSetFloatList {
  type: "SceneNodeSetFloatList";
  path: string;
  prop: string;
  value: number[];
}

/** dedup: by_key */
export interface SceneNodeSetIntList {
  type: "SceneNodeSetIntList";
  path: string;
  prop: string;
  value: number[];
}

/** dedup: by_key */
export interface SceneNodeSetStringList {
  type: "SceneNodeSetStringList";
  path: string;
  prop: string;
  value: string[];
}

/** dedup: purge_prefix */
export interface SceneNodeRemove {
  type: "SceneNodeRemove";
  path: string;
}

/** dedup: by_key */
export interface GuiAddButton {
  type: "GuiAddButton";
  uid: number;
  container: number;
  order: number;
  label: string;
  hint: string;
  disabled: boolean;
  visible: boolean;
  color: number[];
  value: number;
}

/** dedup: by_key */
export interface GuiAddCheckbox {
  type: "GuiAddCheckbox";
  uid: number;
  container: number;
  order: number;
  label: string;
  hint: string;
  disabled: boolean;
  visible: boolean;
  value: boolean;
}

/** dedup: by_key */
export interface GuiAddSlider {
  type: "GuiAddSlider";
  uid: number;
  container: number;
  order: number;
  label: string;
  hint: string;
  disabled: boolean;
  visible: boolean;
  min: number;
  max: number;
  step: number;
  value: number;
}

/** dedup: by_key */
export interface GuiAddNumber {
  type: "GuiAddNumber";
  uid: number;
  container: number;
  order: number;
  label: string;
  hint: string;
  disabled: boolean;
  visible: boolean;
  min: number;
  max: number;
  step: number;
  value: number;
}

/** dedup: by_key */
export interface GuiAddText {
  type: "GuiAddText";
  uid: number;
  container: number;
  order: number;
  label: string;
  hint: string;
  disabled: boolean;
  visible: boolean;
  value: string;
}

/** dedup: by_key */
export interface GuiAddDropdown {
  type: "GuiAddDropdown";
  uid: number;
  container: number;
  order: number;
  label: string;
  hint: string;
  disabled: boolean;
  visible: boolean;
  options: string[];
  value: string;
}

/** dedup: by_key */
export interface GuiAddRgb {
  type: "GuiAddRgb";
  uid: number;
  container: number;
  order: number;
  label: string;
  hint: string;
  disabled: boolean;
  visible: boolean;
  value: [number, number, number];
}

/** dedup: by_key */
export interface GuiAddVector3 {
  type: "GuiAddVector3";
  uid: number;
  container: number;
  order: number;
  label: string;
  hint: string;
  disabled: boolean;
  visible: boolean;
  step: number;
  value: [number, number, number];
}

/** dedup: by_key */
export interface GuiAddFolder {
  type: "GuiAddFolder";
  uid: number;
  container: number;
  order: number;
  label: string;
  visible: boolean;
  expanded: boolean;
}

/** dedup: by_key */
export interface GuiAddTabGroup {
  type: "GuiAddTabGroup";
  uid: number;
  container: number;
  order: number;
  visible: boolean;
}

/** dedup: by_key */
export interface GuiAddTab {
  type: "GuiAddTab";
  uid: number;
  container: number;
  order: number;
  label: string;
  visible: boolean;
}

/** dedup: by_key */
export interface GuiAddMarkdown {
  type: "GuiAddMarkdown";
  uid: number;
  container: number;
  order: number;
  content: string;
  visible: boolean;
}

/** dedup: by_key */
export interface GuiSetPropBool {
  type: "GuiSetPropBool";
  uid: number;
  prop: string;
  value: boolean;
}

/** dedup: by_key */
export interface GuiSetPropInt {
  type: "GuiSetPropInt";
  uid: number;
  prop: string;
  value: number;
}

/** dedup: by_key */
export interface GuiSetPropFloat {
  type: "GuiSetPropFloat";
  uid: number;
  prop: string;
  value: number;
}

/** dedup: by_key */
export interface GuiSetPropString {
  type: "GuiSetPropString";
  uid: number;
  prop: string;
  value: string;
}

/** dedup: by_key */
export interface GuiSetPropBytes {
  type: "GuiSetPropBytes";
  uid: number;
  prop: string;
  value: Uint8Array;
}

/** dedup: by_key */
export interface GuiSetPropFloat32Array {
  type: "GuiSetPropFloat32Array";
  uid: number;
  prop: string;
  value: Uint8Array;
}

/** dedup: by_key */
export interface GuiSetPropFloatList {
  type: "GuiSetPropFloatList";
  uid: number;
  prop: string;
  value: number[];
}

/** dedup: by_key */
export interface GuiSetPropIntList {
  type: "GuiSetPropIntList";
  uid: number;
  prop: string;
  value: number[];
}

/** dedup: by_key */
export interface GuiSetPropStringList {
  type: "GuiSetPropStringList";
  uid: number;
  prop: string;
  value: string[];
}

/** dedup: by_key */
export interface GuiSetValueBool {
  type: "GuiSetValueBool";
  uid: number;
  value: boolean;
}

/** dedup: by_key */
export interface GuiSetValueInt {
  type: "GuiSetValueInt";
  uid: number;
  value: number;
}

/** dedup: by_key */
export interface GuiSetValueFloat {
  type: "GuiSetValueFloat";
  uid: number;
  value: number;
}

/** dedup: by_key */
export interface GuiSetValueString {
  type: "GuiSetValueString";
  uid: number;
  value: string;
}

/** dedup: by_key */
export interface GuiSetValueBytes {
  type: "GuiSetValueBytes";
  uid: number;
  value: Uint8Array;
}

/** dedup: by_key */
export interface GuiSetValueFloat32Array {
  type: "GuiSetValueFloat32Array";
  uid: number;
  value: Uint8Array;
}

/** dedup: by_key */
export interface GuiSetValueFloatList {
  type: "GuiSetValueFloatList";
  uid: number;
  value: number[];
}

/** dedup: by_key */
export interface GuiSetValueIntList {
  type: "GuiSetValueIntList";
  uid: number;
  value: number[];
}

/** dedup: by_key */
export interface GuiSetValueStringList {
  type: "GuiSetValueStringList";
  uid: number;
  value: string[];
}

/** dedup: purge_prefix */
export interface GuiRemove {
  type: "GuiRemove";
  uid: number;
}

/** dedup: none */
export interface GuiUpdateBool {
  type: "GuiUpdateBool";
  uid: number;
  value: boolean;
}

/** dedup: none */
export interface GuiUpdateInt {
  type: "GuiUpdateInt";
  uid: number;
  value: number;
}

/** dedup: none */
export interface GuiUpdateFloat {
  type: "GuiUpdateFloat";
  uid: number;
  value: number;
}

/** dedup: none */
export interface GuiUpdateString {
  type: "GuiUpdateString";
  uid: number;
  value: string;
}

/** dedup: none */
export interface GuiUpdateBytes {
  type: "GuiUpdateBytes";
  uid: number;
  value: Uint8Array;
}

/** dedup: none */
export interface GuiUpdateFloat32Array {
  type: "GuiUpdateFloat32Array";
  uid: number;
  value: Uint8Array;
}

/** dedup: none */
export interface GuiUpdateFloatList {
  type: "GuiUpdateFloatList";
  uid: number;
  value: number[];
}

/** dedup: none */
export interface GuiUpdateIntList {
  type: "GuiUpdateIntList";
  uid: number;
  value: number[];
}

/** dedup: none */
export interface GuiUpdateStringList {
  type: "GuiUpdateStringList";
  uid: number;
  value: string[];
}

/** dedup: by_key */
export interface CameraSet {
  type: "CameraSet";
  wxyz: [number, number, number, number];
  position: [number, number, number];
  fov: number;
  aspect: number;
  look_at: [number, number, number];
}

/** dedup: none */
export interface CameraReport {
  type: "CameraReport";
  wxyz: [number, number, number, number];
  position: [number, number, number];
  fov: number;
  aspect: number;
  look_at: [number, number, number];
}

/** dedup: none */
export interface SceneClick {
  type: "SceneClick";
  path?: string;
  ray_origin: [number, number, number];
  ray_direction: [number, number, number];
  screen_pos: [number, number];
}

export type Message =
  | ClientHello
  | ServerAccept
  | ServerReject
  | Ack
  | SceneFrameUpsert
  | SceneGridUpsert
  | ScenePointCloudUpsert
  | SceneLineSegmentsUpsert
  | SceneMeshUpsert
  | SceneBoxUpsert
  | SceneIcosphereUpsert
  | SceneCameraFrustumUpsert
  | SceneLabelUpsert
  | SceneImageUpsert
  | ScenePlaceholderUpsert
  | SceneNodeSetBool
  | SceneNodeSetInt
  | SceneNodeSetFloat
  | SceneNodeSetString
  | SceneNodeSetBytes
  | SceneNodeSetFloat32Array
  | SceneNodeSetFloatList
  | SceneNodeSetIntList
  | SceneNodeSetStringList
  | SceneNodeRemove
  | GuiAddButton
  | GuiAddCheckbox
  | GuiAddSlider
  | GuiAddNumber
  | GuiAddText
  | GuiAddDropdown
  | GuiAddRgb
  | GuiAddVector3
  | GuiAddFolder
  | GuiAddTabGroup
  | GuiAddTab
  | GuiAddMarkdown
  | GuiSetPropBool
  | GuiSetPropInt
  | GuiSetPropFloat
  | GuiSetPropString
  | GuiSetPropBytes
  | GuiSetPropFloat32Array
  | GuiSetPropFloatList
  | GuiSetPropIntList
  | GuiSetPropStringList
  | GuiSetValueBool
  | GuiSetValueInt
  | GuiSetValueFloat
  | GuiSetValueString
  | GuiSetValueBytes
  | GuiSetValueFloat32Array
  | GuiSetValueFloatList
  | GuiSetValueIntList
  | GuiSetValueStringList
  | GuiRemove
  | GuiUpdateBool
  | GuiUpdateInt
  | GuiUpdateFloat
  | GuiUpdateString
  | GuiUpdateBytes
  | GuiUpdateFloat32Array
  | GuiUpdateFloatList
  | GuiUpdateIntList
  | GuiUpdateStringList
  | CameraSet
  | CameraReport
  | SceneClick;

export type MessageType = Message["type"];
