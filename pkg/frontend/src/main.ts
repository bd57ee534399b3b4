import { ApiClient } from "./api.js";
import { ExplorerApp } from "./app.js";

const params = new URLSearchParams(window.location.search);
const baseUrl = params.get("api") ?? (window as { SEOPINION_API?: string }).SEOPINION_API ?? "";

const root = document.getElementById("app");
if (!root) {
  throw new Error("missing #app root element");
}
void new ExplorerApp(root, new ApiClient(baseUrl)).start();
