import { ApiError, ProtocolError, SessionApi } from "./api.js";
import { questionList, renderConclusions, renderExplanation, renderQuestions } from "./panes.js";
import { SAMPLES } from "./samples.js";
import type { SessionView } from "./types.js";

export class App {
  api: SessionApi;
  view: SessionView | null = null;
  selected: string | null = null;
  private order: string[] = [];
  private busy = false;

  constructor(
    private root: HTMLElement,
    apiBase = "",
  ) {
    this.api = new SessionApi(apiBase);
  }

  mount(): void {
    const tabs = SAMPLES.map(
      (s) => `<button class="load" data-sample="${s.name}">${s.name}</button>`,
    ).join(" ");
    this.root.innerHTML = `
      <header>
        <h1>Decision console</h1>
        <span class="samples">Load sample: ${tabs}</span>
        <span class="session-id"></span>
      </header>
      <div class="banner" hidden></div>
      <main class="panes">
        <section class="pane" data-pane="questions"><h2>Questions</h2><div class="body"></div></section>
        <section class="pane" data-pane="conclusions"><h2>Conclusions</h2><div class="body"></div></section>
        <section class="pane" data-pane="explanation"><h2>Explanation</h2><div class="body"></div></section>
      </main>
      <div class="toasts"></div>`;
    this.root.addEventListener("click", (ev) => this.onClick(ev));
    this.render();
  }

  private onClick(ev: Event): void {
    const target = ev.target as HTMLElement;
    const sample = target.closest("[data-sample]") as HTMLElement | null;
    if (sample) {
      void this.loadSample(sample.dataset.sample!);
      return;
    }
    const act = target.closest("[data-act]") as HTMLElement | null;
    if (act) {
      const fact = (act.closest("[data-fact]") as HTMLElement).dataset.fact!;
      if (act.dataset.act === "yes") void this.answer(fact, true);
      else if (act.dataset.act === "no") void this.answer(fact, false);
      else if (act.dataset.act === "skip") this.skip(fact);
      else if (act.dataset.act === "retract") void this.retract(fact);
      return;
    }
    const pick = target.closest("[data-pick]") as HTMLElement | null;
    if (pick) {
      this.selected = (pick.closest("[data-fact]") as HTMLElement).dataset.fact!;
      this.render();
    }
  }

  async loadSample(name: string): Promise<void> {
    const sample = SAMPLES.find((s) => s.name === name);
    if (!sample) return;
    await this.mutate(() => this.api.createSession(sample.request));
    this.selected = null;
    this.order = [];
    this.render();
  }

  async answer(fact: string, value: boolean): Promise<void> {
    if (!this.view) return;
    await this.mutate(() => this.api.answer(this.view!.session_id, fact, value));
    this.render();
  }

  async retract(fact: string): Promise<void> {
    if (!this.view) return;
    await this.mutate(() => this.api.retract(this.view!.session_id, fact));
    this.render();
  }

  /** Push the question to the back of the list; purely cosmetic. */
  skip(fact: string): void {
    this.order = this.order.filter((f) => f !== fact);
    this.order.push(fact);
    this.render();
  }

  // One mutation in flight at a time; the view is whatever the server
  // last said, never a local guess.
  private async mutate(call: () => Promise<SessionView>): Promise<void> {
    if (this.busy) return;
    this.busy = true;
    try {
      this.view = await call();
      this.banner(null);
    } catch (err) {
      if (err instanceof ApiError) this.toast(err.message);
      else if (err instanceof ProtocolError) this.banner(err.message);
      else throw err;
    } finally {
      this.busy = false;
    }
  }

  private orderedQuestions(): string[] {
    if (!this.view) return [];
    const current = questionList(this.view);
    const ranked = this.order.filter((f) => current.includes(f));
    const fresh = current.filter((f) => !ranked.includes(f));
    this.order = [...fresh, ...ranked];
    return this.order;
  }

  render(): void {
    const pane = (id: string) =>
      this.root.querySelector(`[data-pane="${id}"] .body`) as HTMLElement;
    if (!this.view) {
      pane("questions").innerHTML = '<p class="empty">load a sample to begin</p>';
      pane("conclusions").innerHTML = "";
      pane("explanation").innerHTML = "";
      return;
    }
    // Keep the selection pinned to a query that can still be explained.
    if (this.selected === null || !this.view.queries.some((q) => q.fact === this.selected && q.explanation)) {
      this.selected = this.view.queries.find((q) => q.explanation)?.fact ?? null;
    }
    const idLabel = this.root.querySelector(".session-id") as HTMLElement;
    idLabel.textContent = `${this.view.session_id} · ${this.view.semantics}`;
    pane("questions").innerHTML = renderQuestions(this.orderedQuestions(), this.view.answered);
    pane("conclusions").innerHTML = renderConclusions(this.view, this.selected);
    pane("explanation").innerHTML = renderExplanation(this.view, this.selected);
  }

  toast(message: string): void {
    const holder = this.root.querySelector(".toasts") as HTMLElement;
    const div = document.createElement("div");
    div.className = "toast";
    div.textContent = message;
    holder.appendChild(div);
    setTimeout(() => div.remove(), 4000);
  }

  banner(message: string | null): void {
    const div = this.root.querySelector(".banner") as HTMLElement;
    if (message === null) {
      div.hidden = true;
    } else {
      div.hidden = false;
      div.textContent = message;
    }
  }
}

const boot = typeof document !== "undefined" ? document.getElementById("app") : null;
if (boot) {
  const base = new URLSearchParams(location.search).get("api") ?? "";
  new App(boot, base).mount();
}
