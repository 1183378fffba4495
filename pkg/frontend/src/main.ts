import { StudioApp } from "./app.js";

const app = new StudioApp(document);
app.start().catch((err) => {
  const el = document.getElementById("status");
  if (el) {
    el.textContent = `failed to start: ${err}`;
    el.classList.add("error");
  }
});
