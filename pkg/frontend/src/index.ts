export * from "./types.js";
export { ApiClient, ApiError, type FetchLike } from "./api.js";
export { CLUSTER_PALETTE, colorForCluster } from "./palette.js";
export {
  DEFAULT_LAYOUT,
  defaultCamera,
  makeNode,
  runLayout,
  seedPosition,
  stepLayout,
  type CameraState,
  type LayoutLink,
  type LayoutNode,
  type LayoutOptions,
  type Vec3,
} from "./layout.js";
export { Scene, type ApplyResult, type ViewNode } from "./scene.js";
export { CsPanel, type SlotView } from "./csPanel.js";
export { NO_DATA, formatTooltip } from "./tooltip.js";
export { ExplorerController, type DragOutcome } from "./controller.js";
